#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "panoptigon/analysis.hpp"
#include "panoptigon/census.hpp"
#include "panoptigon/io.hpp"
#include "panoptigon/svg.hpp"

namespace fs = std::filesystem;
using namespace panoptigon;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A polygon literal, or @file holding polygon lines or JSON lines (plain
// polygons or census records).
std::vector<LatticePolygon> load_polygons(const std::string& source) {
  if (source.empty() || source[0] != '@') return {parse_polygon(source)};
  std::istringstream in(read_file(source.substr(1)));
  std::vector<LatticePolygon> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '{') {
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON line: ") + e.what());
      }
      out.push_back(polygon_from_json(j.contains("canonical") ? j["canonical"] : j));
    } else {
      out.push_back(parse_polygon(line));
    }
  }
  if (out.empty()) throw std::invalid_argument("no polygons in " + source.substr(1));
  return out;
}

fs::path output_dir(const std::string& flag) {
  fs::path dir = ".";
  if (!flag.empty()) {
    dir = flag;
  } else if (const char* env = std::getenv("PANOPTIGON_OUT"); env && *env) {
    dir = env;
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

template <class Range, class ToJson>
void write_ndjson(const fs::path& path, const Range& items, ToJson&& convert) {
  std::string text;
  for (const auto& item : items) text += convert(item).dump() + '\n';
  write_text(path, text);
}

json raw_line(const LatticePolygon& p) {
  json j = to_json(p);
  j["lattice_point_count"] = to_json(lattice_point_count(p));
  j["genus"] = to_json(genus(p));
  j["hyperelliptic"] = is_hyperelliptic(p);
  return j;
}

std::map<std::string, std::size_t> count_by_size(const std::vector<CensusRecord>& records) {
  std::map<std::string, std::size_t> out;
  for (const auto& r : records) ++out[to_string(r.lattice_point_count)];
  return out;
}

bool headline(const std::string& name, std::size_t got, std::size_t expected) {
  bool ok = got == expected;
  std::cout << name << std::string(name.size() < 18 ? 18 - name.size() : 1, ' ') << got << "  (expected "
            << expected << ")" << (ok ? "" : "  MISMATCH") << '\n';
  return ok;
}

struct Options {
  std::string polygon;
  bool json_out = false;
  bool table_out = false;
  std::string svg;
  std::string kind;
  int genus = -1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool slow_oracle = false;
  std::string out;
  bool relaxed = false;
};

int cmd_analyze(const Options& o) {
  auto polys = load_polygons(o.polygon);
  for (const auto& p : polys) {
    AnalysisReport r = analyze(p);
    if (o.json_out) {
      std::cout << (polys.size() == 1 ? to_json(r).dump(2) : to_json(r).dump()) << '\n';
    } else {
      std::cout << to_table(r);
      if (polys.size() > 1) std::cout << '\n';
    }
    if (!o.svg.empty()) write_text(o.svg, render_svg(p, {40, o.relaxed}));
  }
  return kOk;
}

int census_raw(const Options& o, const fs::path& dir) {
  RawEnumeration raw = enumerate_raw();
  write_ndjson(dir / "raw.ndjson", raw.polygons, raw_line);
  json summary = {{"raw", raw.polygons.size()},
                  {"raw_genus_filter", raw.genus_filtered.size()},
                  {"closed_sets", raw.closed_sets}};
  bool ok = headline("raw", raw.polygons.size(), 215);
  std::cout << "closed sets       " << raw.closed_sets << '\n';
  std::cout << "genus filter      " << raw.genus_filtered.size() << "  (dimension 2, genus >= 1)\n";
  if (o.slow_oracle) {
    RawEnumeration slow = enumerate_raw_exhaustive(o.threads);
    bool same = slow.polygons == raw.polygons && slow.closed_sets == raw.closed_sets;
    std::cout << "exhaustive sweep  " << slow.polygons.size() << " raw, " << slow.closed_sets << " closed sets"
              << (same ? "  (identical)" : "  DIFFERS") << '\n';
    summary["exhaustive_raw"] = slow.polygons.size();
    ok = ok && same;
  }
  write_text(dir / "raw_summary.json", summary.dump(2) + '\n');
  return ok ? kOk : kMismatch;
}

int census_nonhyperelliptic(const Options& o, const fs::path& dir) {
  auto records = nonhyperelliptic_census(o.threads);
  write_ndjson(dir / "nonhyperelliptic.ndjson", records, [](const CensusRecord& r) { return to_json(r); });
  json by_count = json::object();
  for (const auto& [k, v] : count_by_size(records)) by_count[k] = v;
  json summary = {{"nonhyperelliptic", records.size()}, {"by_count", by_count}};
  write_text(dir / "nonhyperelliptic_summary.json", summary.dump(2) + '\n');
  return headline("nonhyperelliptic", records.size(), 69) ? kOk : kMismatch;
}

int census_full(const Options& o, const fs::path& dir) {
  RawEnumeration raw = enumerate_raw();
  FullCensus full = full_panoptigon_census(o.threads);
  CensusSummary s;
  s.raw = raw.polygons.size();
  s.raw_genus_filter = raw.genus_filtered.size();
  s.sporadic = sporadic_ld2().size();
  s.total = full.nonhyperelliptic.size();
  s.nonhyperelliptic = s.total - s.sporadic;
  s.lw3plus = full.lw3plus.size();
  s.by_count = count_by_size(full.nonhyperelliptic);
  auto convert = [](const CensusRecord& r) { return to_json(r); };
  write_ndjson(dir / "full.ndjson", full.nonhyperelliptic, convert);
  write_ndjson(dir / "lw3plus.ndjson", full.lw3plus, convert);
  write_text(dir / "summary.json", to_json(s).dump(2) + '\n');
  bool ok = headline("raw", s.raw, 215);
  ok = headline("nonhyperelliptic", s.nonhyperelliptic, 69) && ok;
  ok = headline("sporadic", s.sporadic, 3) && ok;
  ok = headline("total", s.total, 72) && ok;
  ok = headline("lw3plus", s.lw3plus, 73) && ok;
  ok = headline("12 points", s.by_count["12"], 15) && ok;
  ok = headline("13 points", s.by_count["13"], 8) && ok;
  return ok ? kOk : kMismatch;
}

int census_maximal(const Options& o, const fs::path& dir, int width) {
  if (o.genus < 3) {
    std::cerr << "error: --genus G with G >= 3 is required\n";
    return kUsage;
  }
  auto polys = width == 3 ? maximal_lw3(o.genus) : maximal_lw4(o.genus);
  fs::path file = dir / ("maximal_lw" + std::to_string(width) + "_g" + std::to_string(o.genus) + ".ndjson");
  write_ndjson(file, polys, [](const LatticePolygon& p) { return to_json(make_record(p)); });
  std::cout << "genus " << o.genus << ": " << polys.size() << " maximal polygons of lattice width " << width
            << '\n';
  if (width == 3 && o.genus >= 4) {
    Integer formula = maximal_lw3_count_formula(o.genus);
    Integer delta = Integer(polys.size()) - formula;
    std::cout << "formula " << formula << ", enumeration " << polys.size() << ", delta " << delta << '\n';
  }
  return kOk;
}

int cmd_census(const Options& o) {
  fs::path dir = output_dir(o.out);
  if (o.kind == "raw") return census_raw(o, dir);
  if (o.kind == "nonhyperelliptic") return census_nonhyperelliptic(o, dir);
  if (o.kind == "full") return census_full(o, dir);
  if (o.kind == "maximal-lw3") return census_maximal(o, dir, 3);
  if (o.kind == "maximal-lw4") return census_maximal(o, dir, 4);
  std::cerr << "error: unknown census kind " << o.kind << '\n';
  return kUsage;
}

int cmd_render(const Options& o) {
  std::vector<LatticePolygon> polys;
  try {
    polys = load_polygons(o.polygon);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::vector<std::string> svgs;
  try {
    for (const auto& p : polys) svgs.push_back(render_svg(p, {40, o.relaxed}));
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
  if (o.svg.empty()) {
    for (const auto& s : svgs) std::cout << s;
    return kOk;
  }
  if (svgs.size() == 1) {
    write_text(o.svg, svgs[0]);
    return kOk;
  }
  fs::path base(o.svg);
  for (std::size_t i = 0; i < svgs.size(); ++i) {
    char suffix[32];
    std::snprintf(suffix, sizeof suffix, "_%03zu", i + 1);
    fs::path file = base.parent_path() / (base.stem().string() + suffix + base.extension().string());
    write_text(file, svgs[i]);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice polygon geometry and the panoptigon census"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report on one polygon");
  analyze_cmd->add_option("polygon", o.polygon, "\"x,y x,y ...\" or @file")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", o.json_out, "JSON output");
  analyze_cmd->add_flag("--table", o.table_out, "Table output (default)")->excludes(json_flag);
  analyze_cmd->add_option("--svg", o.svg, "Also write an SVG drawing");
  analyze_cmd->add_flag("--relaxed", o.relaxed, "Overlay the relaxed polygon in the SVG");

  auto* census_cmd = app.add_subcommand("census", "Run a census");
  census_cmd->add_option("kind", o.kind, "raw | nonhyperelliptic | full | maximal-lw3 | maximal-lw4")
      ->required()
      ->check(CLI::IsMember({"raw", "nonhyperelliptic", "full", "maximal-lw3", "maximal-lw4"}));
  census_cmd->add_option("--genus", o.genus, "Genus for the maximal kinds");
  census_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_flag("--slow-oracle", o.slow_oracle, "Also sweep every subset of the frame (raw)");
  census_cmd->add_option("--out", o.out, "Output directory (default $PANOPTIGON_OUT or .)");

  auto* render_cmd = app.add_subcommand("render", "Draw polygons as SVG");
  render_cmd->add_option("polygon", o.polygon, "\"x,y x,y ...\" or @file (polygon lines or NDJSON)")->required();
  render_cmd->add_option("--svg", o.svg, "Output path (stdout when omitted)");
  render_cmd->add_flag("--relaxed", o.relaxed, "Overlay the relaxed polygon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o);
    if (*census_cmd) return cmd_census(o);
    if (*render_cmd) return cmd_render(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
