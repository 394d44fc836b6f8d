#include "dirnet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "dirnet/fixtures.hpp"
#include "dirnet/io.hpp"

namespace dirnet {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw PreconditionError("cannot write " + path.string());
}

int report_error(std::ostream& err, int code, const char* kind, const std::string& message) {
  Json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  err << j.dump() << '\n';
  return code;
}

void write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto put = [&](const std::string& name, const Json& j) { write_file(dir / (name + ".json"), j.dump(2) + "\n"); };
  for (const StarFixture& f : star_fixtures()) put(f.name, network_to_json(f.network));
  put("hexagon_cycle", network_to_json(hexagon_cycle()));
  put("degree5_star", network_to_json(degree5_star()));
  for (const NamedInstance& n : instance_fixtures()) put(n.name, instance_to_json(n.instance));

  const Instance rect = rectangle_instance(30);
  const QuadrilateralCertificate q = certify_quadrilateral(rect.sources[0], rect.sources[1], rect.sinks[0], rect.sinks[1]);
  put("rectangle_30.cert", certificate_to_json(q.certificate));
  put("hexagon.cert", certificate_to_json(certify_hexagon()));
  for (const CertifiedInstance& c : certify_l1_instances()) put(c.name + ".cert", certificate_to_json(c.certificate));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest directed networks in the plane", "dirnet"};
  app.require_subcommand(1);

  std::string norm_text, svg_path, instance_path, network_path, certificate_path, out_dir;
  int k_max = -1, threads = 1;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  bool trace = false;

  auto add_norm = [&](CLI::App* sub) { sub->add_option("--norm", norm_text, "override the instance norm"); };

  CLI::App* solve_cmd = app.add_subcommand("solve", "shortest network for an instance");
  solve_cmd->add_option("instance", instance_path)->required();
  add_norm(solve_cmd);
  solve_cmd->add_option("--kmax", k_max, "largest Steiner point count")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--threads", threads)->check(CLI::Range(1, 256));
  solve_cmd->add_flag("--trace", trace, "include every optimized topology");
  solve_cmd->add_option("--svg", svg_path, "also write the network as SVG");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a network against an instance");
  verify_cmd->add_option("instance", instance_path)->required();
  verify_cmd->add_option("network", network_path)->required();
  add_norm(verify_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify every Steiner point of a network");
  classify_cmd->add_option("network", network_path)->required();

  CLI::App* certify_cmd = app.add_subcommand("certify", "validate a lower-bound certificate");
  certify_cmd->add_option("instance", instance_path)->required();
  certify_cmd->add_option("certificate", certificate_path)->required();
  add_norm(certify_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "draw a network as SVG");
  render_cmd->add_option("network", network_path)->required();
  render_cmd->add_option("--svg", svg_path, "output file (default: standard output)");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "write the built-in instances and networks");
  fixtures_cmd->add_option("dir", out_dir)->required();

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error(err, 2, "parse", e.what());
  }

  try {
    auto load_instance = [&] {
      Instance inst = parse_instance(read_file(instance_path));
      if (!norm_text.empty()) inst.norm = Norm::parse(norm_text);
      return inst;
    };

    if (solve_cmd->parsed()) {
      const Instance inst = load_instance();
      SolveOptions opts;
      opts.k_max = k_max;
      opts.tol = tol;
      opts.seed = seed;
      opts.threads = threads;
      opts.trace = trace;
      const SolveResult r = solve(inst, opts);
      if (!svg_path.empty()) write_file(svg_path, render_svg(r.best));
      out << solve_result_to_json(r, inst.norm).dump(2) << '\n';
    } else if (verify_cmd->parsed()) {
      const Instance inst = load_instance();
      out << verify_report(inst, parse_network(read_file(network_path))).dump(2) << '\n';
    } else if (classify_cmd->parsed()) {
      out << classify_report(parse_network(read_file(network_path))).dump(2) << '\n';
    } else if (certify_cmd->parsed()) {
      const Instance inst = load_instance();
      const Certificate cert = parse_certificate(read_file(certificate_path));
      const CertificateCheck c = verify_certificate(inst, cert);
      Json j;
      j["valid"] = c.valid;
      j["norm"] = cert.norm.to_string();
      j["target_norm"] = inst.norm.to_string();
      if (c.valid) j["bound"] = report_number(c.bound);
      else j["reason"] = c.reason;
      out << j.dump(2) << '\n';
    } else if (render_cmd->parsed()) {
      const std::string svg = render_svg(parse_network(read_file(network_path)));
      if (svg_path.empty()) out << svg;
      else write_file(svg_path, svg);
    } else if (fixtures_cmd->parsed()) {
      write_fixtures(out_dir);
      Json j;
      j["written"] = out_dir;
      out << j.dump(2) << '\n';
    }
  } catch (const ParseError& e) {
    return report_error(err, 2, "parse", e.what());
  } catch (const PreconditionError& e) {
    return report_error(err, 3, "precondition", e.what());
  } catch (const ResourceLimitError& e) {
    return report_error(err, 4, "resource", e.what());
  } catch (const std::exception& e) {
    return report_error(err, 1, "internal", e.what());
  }
  return 0;
}

}  // namespace dirnet
