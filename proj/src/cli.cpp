#include "z2norm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>

#include "z2norm/arith.hpp"
#include "z2norm/curve_complex.hpp"
#include "z2norm/report.hpp"
#include "z2norm/verify.hpp"

namespace z2norm::cli {

namespace {

Int parse_int(const std::string& text) {
  Int v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) throw ParseError("expected an integer", text);
  return v;
}

void print_path(std::ostream& out, const std::vector<Slope>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << path[i];
  out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z2-Thurston norms and non-orientable genera of torus bundles and semi-bundles"};
  app.require_subcommand(1);
  app.positionals_at_end(false);

  std::string p_text, q_text, s1_text, s2_text, matrix_text, slope_text, in_path, out_path, center_text = "0/1",
                                                                                            level = "quick";
  bool as_json = false;
  std::size_t cap = ReportOptions{}.certificate_cap;
  std::size_t radius = 1;
  Int bound = 10;

  auto* bw = app.add_subcommand("bw", "Bredon-Wood invariant N(p,q)");
  bw->add_option("p", p_text)->required();
  bw->add_option("q", q_text)->required();

  auto* dist = app.add_subcommand("dist", "curve-complex distance between two slopes");
  dist->add_option("s1", s1_text)->required();
  dist->add_option("s2", s2_text)->required();

  auto* geo = app.add_subcommand("geodesic", "the tree path between two slopes");
  geo->add_option("s1", s1_text)->required();
  geo->add_option("s2", s2_text)->required();

  auto* act = app.add_subcommand("act", "image of a slope under a matrix");
  act->add_option("--matrix,-m", matrix_text, "a,c;b,d")->required();
  act->add_option("slope", slope_text)->required();

  auto* bundle = app.add_subcommand("bundle", "report for the mapping torus of a matrix");
  bundle->add_option("--matrix,-m", matrix_text, "a,c;b,d")->required();
  bundle->add_flag("--json", as_json);
  bundle->add_option("--cap", cap, "longest geodesic certificate printed");

  auto* semi = app.add_subcommand("semibundle", "report for the torus semi-bundle glued by a matrix");
  semi->add_option("--matrix,-m", matrix_text, "a,c;b,d")->required();
  semi->add_flag("--json", as_json);
  semi->add_option("--cap", cap, "longest geodesic certificate printed");

  auto* census = app.add_subcommand("census", "CSV summary for a file of matrices");
  census->add_option("--in", in_path)->required();
  census->add_option("--out", out_path)->required();

  auto* graph = app.add_subcommand("export-graph", "DOT ball of the curve complex");
  graph->add_option("--center", center_text);
  graph->add_option("--radius", radius);
  graph->add_option("--bound", bound);

  auto* verify_cmd = app.add_subcommand("verify", "rerun the oracle checks");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  // CLI11 takes its argument vector back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    const ReportOptions opts{cap};
    if (*bw) {
      out << bredon_wood(parse_int(p_text), parse_int(q_text)) << "\n";
    } else if (*dist) {
      out << distance(Slope::parse(s1_text), Slope::parse(s2_text)) << "\n";
    } else if (*geo) {
      print_path(out, geodesic(Slope::parse(s1_text), Slope::parse(s2_text)));
    } else if (*act) {
      out << mat_act(GL2Matrix::parse(matrix_text), Slope::parse(slope_text)) << "\n";
    } else if (*bundle) {
      const auto A = GL2Matrix::parse(matrix_text);
      out << (as_json ? report::bundle_json(A, opts).dump(2) + "\n" : report::bundle_text(A, opts));
    } else if (*semi) {
      const auto A = GL2Matrix::parse(matrix_text);
      out << (as_json ? report::semibundle_json(A, opts).dump(2) + "\n" : report::semibundle_text(A, opts));
    } else if (*census) {
      std::ifstream in(in_path);
      if (!in) throw ParseError("cannot open census input", in_path);
      const auto rows = report::census(report::parse_census_input(in), Execution::Parallel);
      std::ofstream csv(out_path, std::ios::binary);
      if (!csv) throw ParseError("cannot open census output", out_path);
      csv << report::csv_header() << "\n";
      for (const auto& row : rows) csv << report::csv_line(row) << "\n";
      out << rows.size() << " rows written to " << out_path << "\n";
    } else if (*graph) {
      out << export_dot(Slope::parse(center_text), radius, bound);
    } else if (*verify_cmd) {
      const auto cfg = level == "full" ? verify::Config::full() : verify::Config::quick();
      const auto results = verify::run_all(cfg, Execution::Parallel, out);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      return ok ? kExitOk : kExitVerify;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace z2norm::cli
