// Command-line front end: build certified cover graphs from spec files,
// fold/inspect graph files, and report thresholds and slope data.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "foldcover/certify.hpp"
#include "foldcover/completion.hpp"
#include "foldcover/pipeline.hpp"
#include "foldcover/slopes.hpp"

namespace fc = foldcover;

namespace {

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("FOLDCOVER_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw fc::error(fc::errc::validation, "FOLDCOVER_SEED is not an integer");
    }
  }
  return 0;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fc::error(fc::errc::validation, "cannot write '" + path + "'");
  out << content;
}

std::vector<std::string> cert_trailer(const fc::CoverCertificate& cert) {
  std::vector<std::string> lines;
  std::istringstream in(cert.to_text());
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

int cmd_build(const std::string& spec_path, std::vector<long long> nstars,
              const std::string& out_path, int jobs) {
  fc::CoverSpec spec = fc::read_cover_spec_file(spec_path);
  for (long long n : nstars)
    if (n % 2 != 0)
      throw fc::error(fc::errc::validation, "the degree parameter must be even");
  fc::BuildOptions opts;
  opts.seed = seed_from_env();
  fc::CoverFamily family = fc::build_family(spec, opts);
  for (long long n : nstars)
    if (n < family.min_degree)
      throw fc::error(fc::errc::validation,
                      "degree parameter " + std::to_string(n) + " is below the threshold " +
                          std::to_string(family.min_degree));

  auto run_one = [&](long long n) -> std::pair<bool, std::string> {
    fc::LabeledGraph g = fc::instantiate(family, n);
    fc::CoverCertificate cert = fc::verify_certificate(g, spec, n);
    std::ostringstream out;
    fc::write_graph_text(out, g, spec.pres.alphabet, /*canonical=*/true, cert_trailer(cert));
    return {cert.overall(), out.str()};
  };

  std::vector<std::pair<bool, std::string>> results(nstars.size());
  if (jobs > 1 && nstars.size() > 1) {
    std::vector<std::future<std::pair<bool, std::string>>> futs;
    for (long long n : nstars)
      futs.push_back(std::async(std::launch::async, run_one, n));
    for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < nstars.size(); ++i) results[i] = run_one(nstars[i]);
  }

  bool all_pass = true;
  for (size_t i = 0; i < nstars.size(); ++i) {
    std::string path = out_path;
    if (nstars.size() > 1) path += "." + std::to_string(nstars[i]);
    write_file(path, results[i].second);
    std::cout << "wrote " << path << " (degree " << nstars[i] * spec.d_total + 1
              << ", certificate " << (results[i].first ? "pass" : "FAIL") << ")\n";
    all_pass = all_pass && results[i].first;
  }
  std::cout << "nmin=" << family.min_degree << "\n";
  if (!all_pass) throw fc::error(fc::errc::certification, "certificate failed");
  return 0;
}

int cmd_fold(const std::string& graph_path, const std::string& out_path) {
  fc::GraphFile gf = fc::read_graph_file(graph_path);
  fc::FoldResult fr = fc::fold(gf.graph);
  std::ostringstream out;
  fc::write_graph_text(out, fr.graph, gf.alphabet, /*canonical=*/true);
  if (out_path.empty())
    std::cout << out.str();
  else
    write_file(out_path, out.str());
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& spec_path, long long nstar) {
  fc::GraphFile gf = fc::read_graph_file(graph_path);
  fc::CoverSpec spec = fc::read_cover_spec_file(spec_path);
  if (nstar % 2 != 0)
    throw fc::error(fc::errc::validation, "the degree parameter must be even");
  fc::CoverCertificate cert = fc::verify_certificate(gf.graph, spec, nstar);
  std::cout << cert.to_text();
  if (!cert.overall()) throw fc::error(fc::errc::certification, "certificate failed");
  return 0;
}

int cmd_dot(const std::string& graph_path, const std::string& out_path) {
  fc::GraphFile gf = fc::read_graph_file(graph_path);
  std::string dot = fc::to_dot(gf.graph, gf.alphabet);
  if (out_path.empty())
    std::cout << dot;
  else
    write_file(out_path, dot);
  return 0;
}

int cmd_nmin(const std::vector<std::string>& spec_paths, int jobs) {
  fc::BuildOptions opts;
  opts.seed = seed_from_env();
  auto run_one = [&](const std::string& path) {
    fc::CoverFamily family = fc::build_family(fc::read_cover_spec_file(path), opts);
    return family.min_degree;
  };
  std::vector<long long> mins(spec_paths.size());
  if (jobs > 1 && spec_paths.size() > 1) {
    std::vector<std::future<long long>> futs;
    for (const auto& p : spec_paths) futs.push_back(std::async(std::launch::async, run_one, p));
    for (size_t i = 0; i < futs.size(); ++i) mins[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < spec_paths.size(); ++i) mins[i] = run_one(spec_paths[i]);
  }
  long long n0 = 0;
  for (size_t i = 0; i < spec_paths.size(); ++i) {
    std::cout << "spec " << spec_paths[i] << " nmin=" << mins[i] << "\n";
    n0 = std::max(n0, mins[i]);
  }
  if (spec_paths.size() > 1) std::cout << "n0=" << n0 << "\n";
  return 0;
}

int cmd_slopes(const std::string& path) {
  fc::SlopeSystem sys = fc::read_slope_file(path);
  for (int k = 1; k <= sys.torus_count(); ++k) {
    const fc::TorusData& t = sys.tori[k - 1];
    std::cout << "torus " << k << " delta=" << fc::slope_intersection(t.slope[0], t.slope[1])
              << " d1=" << fc::d_ik(sys, 1, k) << " d2=" << fc::d_ik(sys, 2, k)
              << " points=" << fc::intersection_count(sys, k) << "\n";
  }
  std::cout << "d1_lcm=" << fc::d_lcm(sys, 1) << " d2_lcm=" << fc::d_lcm(sys, 2)
            << " cusp_ends=" << fc::total_cusp_ends(sys, 1) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite covers of bounded surfaces via folded labeled graphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "parallelism across specs / degree parameters");

  auto* build = app.add_subcommand("build", "build a certified cover graph from a spec");
  std::string spec_path, out_path = "cover.graph", graph_path;
  std::vector<long long> nstars;
  build->add_option("--spec", spec_path, "spec file")->required();
  build->add_option("--nstar", nstars, "even degree parameter (repeatable)")->required();
  build->add_option("--out", out_path, "output graph file");

  auto* foldc = app.add_subcommand("fold", "fold a graph file");
  foldc->add_option("graph", graph_path, "graph file")->required();
  std::string fold_out;
  foldc->add_option("--out", fold_out, "output path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "re-run the certificate on a graph file");
  std::string vgraph, vspec;
  long long vnstar = 0;
  verify->add_option("--graph", vgraph, "graph file")->required();
  verify->add_option("--spec", vspec, "spec file")->required();
  verify->add_option("--nstar", vnstar, "degree parameter")->required();

  auto* dot = app.add_subcommand("dot", "emit DOT for a graph file");
  std::string dgraph, dot_out;
  dot->add_option("graph", dgraph, "graph file")->required();
  dot->add_option("--out", dot_out, "output path (stdout if omitted)");

  auto* nmin = app.add_subcommand("nmin", "report the threshold degree parameter per spec");
  std::vector<std::string> nmin_specs;
  nmin->add_option("specs", nmin_specs, "spec files")->required();

  auto* slopes = app.add_subcommand("slopes", "report crossing data of a slope system");
  std::string slope_path;
  slopes->add_option("file", slope_path, "slope system file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(spec_path, nstars, out_path, jobs);
    if (foldc->parsed()) return cmd_fold(graph_path, fold_out);
    if (verify->parsed()) return cmd_verify(vgraph, vspec, vnstar);
    if (dot->parsed()) return cmd_dot(dgraph, dot_out);
    if (nmin->parsed()) return cmd_nmin(nmin_specs, jobs);
    if (slopes->parsed()) return cmd_slopes(slope_path);
  } catch (const fc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fc::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
