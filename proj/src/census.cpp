#include "panoptigon/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "panoptigon/detail/frame.hpp"
#include "panoptigon/transform.hpp"

namespace panoptigon {

namespace {

using detail::Frame;
using detail::Mask;
using detail::P64;

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

bool origin_visible(std::int64_t x, std::int64_t y) { return gcd64(x, y) == 1; }

// Points a polygon through the frame may not contain: invisible from the
// origin, or already ruled out by the row constraints.
bool forbidden(std::int64_t x, std::int64_t y) {
  if (x == 0 && y == 0) return false;
  if (!origin_visible(x, y)) return true;
  if (y >= 1 && y <= -x - 2) return true;
  if (x >= 2 && y >= 0) return true;
  if (y == 0 && (x > 1 || x < -1)) return true;
  return false;
}

std::vector<LatticePolygon> dedup_canonical(const std::vector<LatticePolygon>& polys) {
  std::set<LatticePolygon> seen;
  for (const auto& p : polys) seen.insert(canonical_form(p));
  return {seen.begin(), seen.end()};
}

Frame candidate_frame() {
  CandidateFrame cf = candidate_point_set();
  std::vector<P64> pts;
  for (const auto& p : cf.fixed) pts.push_back({p.x.convert_to<std::int64_t>(), p.y.convert_to<std::int64_t>()});
  for (const auto& p : cf.optional) pts.push_back({p.x.convert_to<std::int64_t>(), p.y.convert_to<std::int64_t>()});
  return Frame(std::move(pts));
}

void classify_raw(const Frame& frame, const std::vector<Mask>& closed, RawEnumeration& out) {
  std::vector<LatticePolygon> polys(closed.size(), convex_hull({{0, 0}}));
  std::vector<char> genus_ok(closed.size()), width_ok(closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    LatticePolygon p = frame.polygon(closed[i]);
    if (p.dimension() == 2) {
      genus_ok[i] = genus(p) >= 1;
      width_ok[i] = lattice_width(p).width >= 3;
    }
    polys[i] = std::move(p);
  }
  out.closed_sets = closed.size();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    if (genus_ok[i]) out.genus_filtered.push_back(polys[i]);
    if (width_ok[i]) out.polygons.push_back(polys[i]);
  }
  std::sort(out.polygons.begin(), out.polygons.end());
  std::sort(out.genus_filtered.begin(), out.genus_filtered.end());
}

}  // namespace

CandidateFrame candidate_point_set() {
  CandidateFrame cf;
  cf.fixed = make_point_set({{0, 0}, {-1, -1}, {0, -1}, {1, -1}, {2, -1}});
  std::vector<LatticePoint> opt;
  for (int x = -3; x <= 9; x += 2) opt.push_back({x, -2});
  for (int x = -1; x <= 5; ++x) opt.push_back({x, -1});
  for (int x = -1; x <= 1; ++x) opt.push_back({x, 0});
  for (int y = 1; y <= 7; ++y) {
    for (int x = -y - 1; x <= 1; ++x) {
      if (!origin_visible(x, y)) continue;
      LatticePolygon tri = convex_hull({{x, y}, {-1, -1}, {2, -1}, {0, 0}});
      bool clean = true;
      for (const auto& q : lattice_points(tri)) {
        if (forbidden(q.x.convert_to<std::int64_t>(), q.y.convert_to<std::int64_t>())) clean = false;
      }
      if (clean) opt.push_back({x, y});
    }
  }
  std::erase_if(opt, [&](const LatticePoint& p) { return contains(cf.fixed, p); });
  cf.optional = make_point_set(std::move(opt));
  return cf;
}

RawEnumeration enumerate_raw() {
  Frame frame = candidate_frame();
  CandidateFrame cf = candidate_point_set();
  std::vector<P64> fixed;
  for (const auto& p : cf.fixed) fixed.push_back({p.x.convert_to<std::int64_t>(), p.y.convert_to<std::int64_t>()});
  auto seed = frame.close(frame.mask_of(fixed));
  if (!seed) throw std::logic_error("fixed points escape the frame");
  std::vector<Mask> closed = detail::closed_sets(frame, {*seed}, [](Mask) { return true; });
  RawEnumeration out;
  classify_raw(frame, closed, out);
  return out;
}

RawEnumeration enumerate_raw_exhaustive(unsigned threads) {
  Frame frame = candidate_frame();
  const std::size_t nfixed = candidate_point_set().fixed.size();
  const Mask fixed = (Mask{1} << nfixed) - 1;
  const std::size_t nopt = frame.size() - nfixed;
  const std::size_t total = std::size_t{1} << nopt;
  const std::size_t chunk = std::size_t{1} << 16;
  const std::size_t chunks = (total + chunk - 1) / chunk;
  std::mutex mutex;
  std::vector<Mask> closed;
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::vector<Mask> local;
    for (std::size_t s = c * chunk; s < std::min(total, (c + 1) * chunk); ++s) {
      Mask m = fixed | (Mask{s} << nfixed);
      auto t = frame.close(m);
      if (t && *t == m) local.push_back(m);
    }
    std::lock_guard lock(mutex);
    closed.insert(closed.end(), local.begin(), local.end());
  });
  std::sort(closed.begin(), closed.end());
  RawEnumeration out;
  classify_raw(frame, closed, out);
  return out;
}

CensusRecord make_record(const LatticePolygon& p) {
  CensusRecord r{canonical_form(p), 0, 0, 0, 0, false, {}, false, std::nullopt, std::nullopt};
  const LatticePolygon& c = r.canonical;
  r.lattice_point_count = lattice_point_count(c);
  r.genus = genus(c);
  r.lattice_width = lattice_width(c).width;
  r.lattice_diameter = lattice_diameter(c).length;
  r.hyperelliptic = is_hyperelliptic(c);
  r.panoptigon_points = is_panoptigon(c).panoptigon_points;
  auto relaxed = relaxed_lattice(c);
  r.relaxation_lattice = std::holds_alternative<LatticePolygon>(relaxed);
  if (auto* bad = std::get_if<NotLattice>(&relaxed)) r.relaxation_witness = bad->witness;
  if (auto inner = interior_polygon(c); inner && inner->dimension() == 2) {
    auto max = relaxed_lattice(*inner);
    if (auto* m = std::get_if<LatticePolygon>(&max)) r.max_polygon = *m;
  }
  return r;
}

void sort_records(std::vector<CensusRecord>& records) {
  std::sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    if (a.lattice_point_count != b.lattice_point_count) return a.lattice_point_count < b.lattice_point_count;
    return a.canonical < b.canonical;
  });
}

std::vector<CensusRecord> nonhyperelliptic_census(unsigned threads) {
  RawEnumeration raw = enumerate_raw();
  std::vector<std::optional<LatticePolygon>> canon(raw.polygons.size());
  parallel_for(raw.polygons.size(), threads, [&](std::size_t i) {
    if (!is_hyperelliptic(raw.polygons[i])) canon[i] = canonical_form(raw.polygons[i]);
  });
  std::set<LatticePolygon> classes;
  for (auto& c : canon) {
    if (c) classes.insert(std::move(*c));
  }
  std::vector<LatticePolygon> reps(classes.begin(), classes.end());
  std::vector<std::optional<CensusRecord>> records(reps.size());
  parallel_for(reps.size(), threads, [&](std::size_t i) { records[i] = make_record(reps[i]); });
  std::vector<CensusRecord> out;
  for (auto& r : records) out.push_back(std::move(*r));
  sort_records(out);
  return out;
}

std::vector<CensusRecord> sporadic_ld2() {
  std::vector<CensusRecord> out;
  out.push_back(make_record(convex_hull({{0, 1}, {0, 3}, {4, 0}})));
  out.push_back(make_record(convex_hull({{1, 0}, {2, 0}, {3, 1}, {0, 3}})));
  out.push_back(make_record(convex_hull({{0, 1}, {0, 2}, {2, 3}, {3, 0}})));
  sort_records(out);
  return out;
}

ContainerSearch sporadic_container_search() {
  ContainerSearch out;
  out.containers.push_back(standard_triangle(4));
  for (auto [a, b] : {std::pair{1, 1}, {0, 2}, {1, 2}, {2, 2}}) {
    out.containers.push_back(std::get<LatticePolygon>(relaxed_lattice(trapezoid(a, b))));
  }
  std::set<LatticePolygon> classes;
  for (const auto& container : out.containers) {
    std::vector<P64> pts;
    for (const auto& p : lattice_points(container)) {
      pts.push_back({p.x.convert_to<std::int64_t>(), p.y.convert_to<std::int64_t>()});
    }
    Frame frame(pts);
    std::vector<Mask> seeds;
    for (std::size_t i = 0; i < frame.size(); ++i) seeds.push_back(Mask{1} << i);
    auto keep = [&](Mask m) { return detail::max_pair_gcd(frame.points_of(m)) <= 2; };
    for (Mask m : detail::closed_sets(frame, seeds, keep)) {
      LatticePolygon p = frame.polygon(m);
      if (p.dimension() != 2 || is_hyperelliptic(p)) continue;
      if (!is_panoptigon(p).is_panoptigon) continue;
      classes.insert(canonical_form(p));
    }
  }
  for (const auto& c : classes) out.found.push_back(make_record(c));
  sort_records(out.found);
  return out;
}

FullCensus full_panoptigon_census(unsigned threads) {
  FullCensus out;
  out.nonhyperelliptic = nonhyperelliptic_census(threads);
  for (auto& r : sporadic_ld2()) out.nonhyperelliptic.push_back(std::move(r));
  sort_records(out.nonhyperelliptic);
  out.lw3plus = out.nonhyperelliptic;
  out.lw3plus.push_back(make_record(standard_triangle(3)));
  sort_records(out.lw3plus);
  return out;
}

const Genus1Enumeration& genus1_polygons() {
  static const Genus1Enumeration result = [] {
    Genus1Enumeration e;
    std::size_t stable = 0;
    for (int w = 2; w <= 15; ++w) {
      std::vector<P64> pts;
      for (int y = 0; y <= 3; ++y) {
        for (int x = 0; x <= w; ++x) pts.push_back({x, y});
      }
      Frame frame(pts);
      std::vector<Mask> seeds;
      for (int y = 0; y <= 3; ++y) seeds.push_back(frame.mask_of({{0, y}}));
      auto keep = [&](Mask m) { return detail::hull_stats(frame.points_of(m)).interior <= 1; };
      std::set<LatticePolygon> classes;
      for (Mask m : detail::closed_sets(frame, seeds, keep)) {
        auto stats = detail::hull_stats(frame.points_of(m));
        if (stats.dimension == 2 && stats.interior == 1) classes.insert(canonical_form(frame.polygon(m)));
      }
      std::size_t prev = e.class_count_by_width.empty() ? 0 : e.class_count_by_width.back();
      e.class_count_by_width.push_back(classes.size());
      e.classes.assign(classes.begin(), classes.end());
      e.final_width = w;
      stable = classes.size() == prev ? stable + 1 : 0;
      if (stable >= 2) break;
    }
    return e;
  }();
  return result;
}

std::vector<LatticePolygon> maximal_lw3(int g) {
  if (g < 3) throw std::invalid_argument("maximal_lw3 requires g >= 3");
  std::vector<LatticePolygon> found;
  for (int a = 0; 2 * a <= g - 2; ++a) {
    const int b = g - 2 - a;
    if (b < 1) continue;
    auto relaxed = relaxed_lattice(trapezoid(a, b));
    // T_{0,1} is T_1, whose relaxation T_4 has lattice width 4.
    if (auto* p = std::get_if<LatticePolygon>(&relaxed); p && lattice_width(*p).width == 3) found.push_back(*p);
  }
  return dedup_canonical(found);
}

Integer maximal_lw3_count_formula(int g) {
  if (g < 4) throw std::invalid_argument("count formula requires g >= 4");
  return Integer((g - 2) / 2 - g / 3 + 1);
}

bool relax_condition(const HyperellipticForm& f) {
  if (!is_valid(f)) throw std::invalid_argument("invalid hyperelliptic form");
  if (f.kind == HyperellipticKind::Type1) return 2 * f.i <= 3 * f.g + 1;
  return 2 * f.i >= f.g - 1 && 2 * f.j >= f.g - 1;
}

std::vector<LatticePolygon> maximal_lw4(int g) {
  if (g < 3) throw std::invalid_argument("maximal_lw4 requires g >= 3");
  std::vector<LatticePolygon> found;
  if (g == 3) found.push_back(standard_triangle(4));
  for (const auto& q : genus1_polygons().classes) {
    if (lattice_width(q).width != 2 || lattice_point_count(q) != g) continue;
    auto relaxed = relaxed_lattice(q);
    if (auto* p = std::get_if<LatticePolygon>(&relaxed)) found.push_back(*p);
  }
  for (int h = 2; h < g; ++h) {
    for (const auto& f : hyperelliptic_forms(h)) {
      if (!relax_condition(f)) continue;
      LatticePolygon q = hyperelliptic_polygon(f);
      if (lattice_point_count(q) != g) continue;
      auto relaxed = relaxed_lattice(q);
      auto* p = std::get_if<LatticePolygon>(&relaxed);
      if (!p) throw std::logic_error("relax_condition accepted a non-lattice relaxation");
      found.push_back(*p);
    }
  }
  return dedup_canonical(found);
}

CorollaryReport corollary_lw12_check() {
  CorollaryReport report;
  report.hyperelliptic_genus_bound = 12;
  auto add = [&](std::string family, LatticePolygon q, bool height1 = true) {
    Integer n = lattice_point_count(q);
    if (n > report.max_lattice_points) report.max_lattice_points = n;
    report.entries.push_back({std::move(family), std::move(q), n, height1});
  };
  auto lattice_relaxation = [](const LatticePolygon& q) {
    return std::holds_alternative<LatticePolygon>(relaxed_lattice(q));
  };

  if (LatticePolygon t2 = standard_triangle(2); lattice_relaxation(t2)) add("T_2", t2);
  for (int b = 1; b <= 30; ++b) {
    for (int a = 0; a <= std::min(b, 2); ++a) {
      LatticePolygon q = trapezoid(a, b);
      if (lattice_relaxation(q)) add("T_" + std::to_string(a) + "," + std::to_string(b), q);
    }
  }
  for (const auto& q : genus1_polygons().classes) {
    if (lattice_width(q).width == 2 && lattice_relaxation(q)) add("genus1", q);
  }
  for (int g = 2; g <= report.hyperelliptic_genus_bound; ++g) {
    for (const auto& f : hyperelliptic_forms(g)) {
      if (!hyperelliptic_panoptigon_predicate(f)) continue;
      LatticePolygon q = hyperelliptic_polygon(f);
      if (!lattice_relaxation(q)) continue;
      bool height1 = false;
      for (const auto& p : is_panoptigon(q).panoptigon_points) {
        if (p.y == 1) height1 = true;
      }
      if (!height1) ++report.without_height1_point;
      add(to_string(f.kind) + " g=" + std::to_string(g), q, height1);
    }
  }
  return report;
}

ObstructionReport big_face_obstruction(const LatticePolygon& p) {
  Integer g = genus(p);
  if (g < 2) throw std::invalid_argument("obstruction check requires genus >= 2");
  ObstructionReport r;
  r.interior_panoptigon = panoptigon_report(interior_lattice_points(p)).is_panoptigon;
  if (g >= 14) r.reasons.push_back("genus at least 14 exceeds the panoptigon lattice point bound");
  if (g >= 12) r.reasons.push_back("genus at least 12 exceeds the census bound");
  if (!r.interior_panoptigon) r.reasons.push_back("interior lattice points have no panoptigon point");
  r.verdict = r.reasons.empty() ? Verdict::Passes : Verdict::Fails;
  return r;
}

std::map<int, LatticePolygon> obstruction_witnesses() {
  std::map<int, LatticePolygon> out;
  out.emplace(2, hyperelliptic_polygon({HyperellipticKind::Type1, 2, 2, 0, 0}));
  for (const auto& e : corollary_lw12_check().entries) {
    int n = e.lattice_points.convert_to<int>();
    if (n < 3 || n > 11 || out.count(n)) continue;
    out.emplace(n, std::get<LatticePolygon>(relaxed_lattice(e.polygon)));
  }
  return out;
}

}  // namespace panoptigon
