// Command-line front end: closed formulas, the mutation oracle and the
// verification suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "clusterf/closed_form.hpp"
#include "clusterf/error.hpp"
#include "clusterf/json_io.hpp"
#include "clusterf/oracle.hpp"
#include "clusterf/render.hpp"
#include "clusterf/verify.hpp"

namespace {

using namespace clusterf;

constexpr int kInputError = 1;
constexpr int kMismatch = 2;

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string root_list_text(CartanType t) {
  std::string out;
  for (const auto& r : positive_roots(t)) out += (out.empty() ? "" : " ") + to_string(r);
  return out;
}

RootVector checked_root(const std::string& text, const ParsedInput& in) {
  const CartanType t = in.classification.type;
  const RootVector d = parse_root_list(text);
  if (d.size() != t.rank || !is_positive_root(t, d))
    throw Error(ErrorKind::RootNotInType,
                to_string(d) + " is not a positive root of " + t.name() + "; positive roots: " + root_list_text(t));
  return d;
}

Json metadata(const std::string& command, const ParsedInput& in, const std::string& method) {
  std::vector<std::size_t> relabel;
  for (std::size_t v : in.classification.relabeling) relabel.push_back(v + 1);
  return {{"command", command},
          {"type", in.classification.type.name()},
          {"rank", in.classification.type.rank},
          {"method", method},
          {"relabeling", relabel},
          {"matrix", matrix_to_json(in.matrix)}};
}

struct Common {
  std::string input;
  std::string format = "json";
  std::string method = "closed";
  std::string denom;
  int d_scale = 1;
};

const ClusterRecord& oracle_record(const ParsedInput& in, const RootVector& d, ClusterTable& storage) {
  storage = enumerate_finite_type(in.matrix);
  return storage.at(d);
}

int run_classical(const Common& c) {
  const ParsedInput in = parse_input_text(read_source(c.input));
  const RootVector d = checked_root(c.denom, in);
  ClusterTable storage;
  const LaurentPoly f = c.method == "oracle" ? oracle_record(in, d, storage).f
                                             : f_polynomial_closed(in.matrix, in.classification.type, d);
  const Format fmt = format_from_string(c.format);
  if (fmt == Format::Json) {
    Json doc = metadata("classical", in, c.method);
    doc["d"] = d;
    doc["F"] = poly_to_json(f);
    std::cout << dump_json(doc);
  } else {
    std::cout << render_polynomial(f, fmt);
  }
  return 0;
}

int run_gvector(const Common& c) {
  const ParsedInput in = parse_input_text(read_source(c.input));
  const RootVector d = checked_root(c.denom, in);
  ClusterTable storage;
  const RootVector g = c.method == "oracle" ? oracle_record(in, d, storage).g
                                            : g_vector_closed(in.matrix, in.classification.type, d);
  const Format fmt = format_from_string(c.format);
  if (fmt == Format::Json) {
    Json doc = metadata("gvector", in, c.method);
    doc["d"] = d;
    doc["g"] = g;
    std::cout << dump_json(doc);
  } else {
    std::cout << render_vector(g, fmt);
  }
  return 0;
}

int run_quantum(const Common& c) {
  if (c.d_scale < 1) throw Error(ErrorKind::InvalidInput, "--d-scale must be at least 1");
  const ParsedInput in = parse_input_text(read_source(c.input));
  const RootVector d = checked_root(c.denom, in);
  const QuantumTorusElement f = quantum_f_polynomial_closed(in.matrix, in.classification.type, c.d_scale, d);
  const Format fmt = format_from_string(c.format);
  if (fmt == Format::Json) {
    Json doc = metadata("quantum", in, "closed");
    doc["d"] = d;
    doc["d_scale"] = c.d_scale;
    doc["delta_hat"] = scaled_symmetrizer(in.classification.type, c.d_scale).delta_hat;
    doc["F"] = quantum_to_json(f);
    std::cout << dump_json(doc);
  } else {
    std::cout << render_quantum(f, fmt);
  }
  return 0;
}

int run_enumerate(const Common& c) {
  const ParsedInput in = parse_input_text(read_source(c.input));
  const ClusterTable table = enumerate_finite_type(in.matrix);
  const Format fmt = format_from_string(c.format);
  if (fmt == Format::Json) {
    Json doc = metadata("enumerate", in, "oracle");
    doc["table"] = table_to_json(table);
    std::cout << dump_json(doc);
  } else {
    std::cout << render_table(table, fmt);
  }
  return 0;
}

int run_verify_command(const std::string& suite, std::size_t max_rank, bool serial, const std::string& format) {
  const auto suites = suites_from_string(suite);
  const Format fmt = format_from_string(format);
  VerifyOptions opt;
  opt.max_rank = max_rank;
  opt.parallel = !serial;
  const VerifyReport report = run_verify(suites, opt);
  if (fmt == Format::Json) {
    std::cout << dump_json(verify_report_to_json(report));
  } else {
    for (const auto& s : report.suites)
      std::cout << suite_name(s.suite) << ": " << (s.ok() ? "ok" : "MISMATCH") << " (" << s.cases << " cases, "
                << s.checks << " checks, " << s.mismatches.size() << " mismatches)\n";
    if (const Mismatch* m = report.counterexample())
      std::cout << "counterexample: " << m->type << " orientation " << m->orientation << " [" << m->arrows
                << "] d=" << to_string(m->d) << " e=" << to_string(m->e) << ": " << m->detail << "\n";
  }
  return report.ok() ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact F-polynomials, g-vectors and quantum F-polynomials for classical cluster algebras"};
  app.require_subcommand(1);

  Common common;
  const std::vector<std::string> formats{"json", "text", "latex"};
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", common.input, "Matrix JSON file, or - for stdin")->required();
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* classical = app.add_subcommand("classical", "F-polynomial of a positive root");
  add_input(classical);
  classical->add_option("--denom", common.denom, "Positive root, comma separated")->required();
  classical->add_option("--method", common.method, "closed or oracle")->check(CLI::IsMember({"closed", "oracle"}));

  auto* gvector = app.add_subcommand("gvector", "g-vector of a positive root");
  add_input(gvector);
  gvector->add_option("--denom", common.denom, "Positive root, comma separated")->required();
  gvector->add_option("--method", common.method, "closed or oracle")->check(CLI::IsMember({"closed", "oracle"}));

  auto* quantum = app.add_subcommand("quantum", "Quantum F-polynomial of a positive root");
  add_input(quantum);
  quantum->add_option("--denom", common.denom, "Positive root, comma separated")->required();
  quantum->add_option("--d-scale", common.d_scale, "Positive scale d with delta_hat = d * delta");

  auto* enumerate = app.add_subcommand("enumerate", "All non-initial cluster variables by mutation");
  add_input(enumerate);

  std::string suite = "all";
  std::size_t max_rank = 4;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Differential verification suites");
  verify->add_option("--suite", suite, "formulas, quantum, folding, polygon or all")
      ->check(CLI::IsMember({"formulas", "quantum", "folding", "polygon", "all"}));
  verify->add_option("--max-rank", max_rank, "Largest rank in the corpus")->check(CLI::Range(1, 8));
  verify->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
  verify->add_flag("--serial", serial, "Run the single-threaded reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*classical) return run_classical(common);
    if (*gvector) return run_gvector(common);
    if (*quantum) return run_quantum(common);
    if (*enumerate) return run_enumerate(common);
    if (*verify) return run_verify_command(suite, max_rank, serial, common.format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
