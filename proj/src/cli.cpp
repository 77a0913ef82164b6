#include "rquant/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "rquant/errors.hpp"
#include "rquant/io.hpp"
#include "rquant/quantizer.hpp"

namespace rquant::cli {

namespace {

using io::json;

void emit(const JobConfig& cfg, const json& doc, std::ostream& out) {
  if (cfg.report.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    io::write_json(cfg.report, doc);
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw CLI::ValidationError(msg);
}

std::vector<Rat> parse_matrix_c(const std::string& spec) {
  if (spec == "e11") return {1, 0, 0, 0};
  if (spec == "identity") return {1, 0, 0, 1};
  std::vector<Rat> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (out.size() != 4) throw ParseError("--matrix-c needs e11, identity or four rationals a,b,c,d");
  return out;
}

AlgebraSpec example_algebra(const JobConfig& cfg) {
  if (!cfg.algebra.empty()) return io::algebra_from_json(io::read_json(cfg.algebra));
  if (!cfg.matrix_c.empty()) return AlgebraSpec::matrices2(parse_matrix_c(cfg.matrix_c));
  return AlgebraSpec::scalars(parse_rat(cfg.c));
}

PolyVectorField example_field(const JobConfig& cfg) {
  if (!cfg.field.empty()) return io::field_from_json(io::read_json(cfg.field));
  require(cfg.monomial.has_value(), "permutation family needs --field or --monomial");
  const Space X({"x"}, 1);
  MPoly p = 1;
  for (unsigned i = 0; i < *cfg.monomial; ++i) p = p * MPoly::variable("x");
  return PolyVectorField(X, {p});
}

int cmd_verify_classical(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto r = io::field_from_json(io::read_json(cfg.input));
  if (r.space().slots() != 2) throw MismatchError("verify-classical expects a field on X x X");
  const auto res = check_classical(r);
  emit(cfg, io::classical_residual_to_json(res), out);
  if (res.passes()) return kOk;
  if (!res.cybe.is_zero()) err << "classical Yang-Baxter residual: " << res.cybe.to_string() << "\n";
  if (!res.unitarity.is_zero()) err << "unitarity residual: " << res.unitarity.to_string() << "\n";
  return kCheckFailed;
}

int cmd_verify_quantum(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto R = io::diffeo_from_json(io::read_json(cfg.input));
  if (R.space().slots() != 2) throw MismatchError("verify-quantum expects a map of X x X");
  const auto res = check_quantum(R);
  json doc = io::quantum_residual_to_json(res, R.space().base_space());
  doc["order"] = R.order();
  emit(cfg, doc, out);
  if (res.passes()) return kOk;
  for (const auto& [coord, s] : res.qybe)
    if (!s.is_zero()) err << "Yang-Baxter residual at " << coord << ": " << s.to_string() << "\n";
  for (const auto& [coord, s] : res.unitarity)
    if (!s.is_zero()) err << "unitarity residual at " << coord << ": " << s.to_string() << "\n";
  return kCheckFailed;
}

int cmd_classical_limit(const JobConfig& cfg, std::ostream& out, std::ostream&) {
  const auto R = io::diffeo_from_json(io::read_json(cfg.input));
  const json doc = io::field_to_json(classical_limit(R));
  if (!cfg.output.empty()) {
    io::write_json(cfg.output, doc);
  } else {
    emit(cfg, doc, out);
  }
  return kOk;
}

int cmd_quantize(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.order < 1) throw CLI::ValidationError("quantize needs --order >= 1");
  const auto r = io::field_from_json(io::read_json(cfg.input));
  const auto q = quantize_full(r, cfg.order, QuantizeOptions{false});
  const auto res = check_quantum(q.R);
  const bool limit_ok = classical_limit(q.R) == r;
  if (!cfg.output.empty()) io::write_json(cfg.output, io::diffeo_to_json(q.R));

  json doc = io::quantum_residual_to_json(res, q.data.base);
  doc["order"] = cfg.order;
  doc["classical_limit_matches"] = limit_ok;
  doc["lie"] = io::lie_report_to_json(q.data);
  if (cfg.output.empty()) doc["R"] = io::diffeo_to_json(q.R);
  emit(cfg, doc, out);
  if (res.passes() && limit_ok) return kOk;
  err << "quantization failed its own checks"
      << (limit_ok ? "" : " (classical limit differs from r)") << "\n";
  return kCheckFailed;
}

int cmd_lie_report(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto r = io::field_from_json(io::read_json(cfg.input));
  const auto data = extract(r);
  const json doc = io::lie_report_to_json(data);
  emit(cfg, doc, out);
  if (doc["lemma1"]["passes"].get<bool>()) return kOk;
  err << "cocycle identity fails on extracted data\n";
  return kCheckFailed;
}

int cmd_example(const JobConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.order < 1) throw CLI::ValidationError("example needs --order >= 1");
  PolyVectorField r = PolyVectorField::zero(Space({"x"}, 2));
  std::optional<FormalDiffeo> R;
  if (cfg.family == "line") {
    const Rat c = parse_rat(cfg.c);
    r = line_r(cfg.n, c);
    R = line_R(cfg.n, cfg.order, c);
  } else if (cfg.family == "permutation") {
    const auto v = example_field(cfg);
    r = permutation_r(v);
    R = permutation_R(v, cfg.order);
  } else if (cfg.family == "algebra") {
    const auto A = example_algebra(cfg);
    r = algebra_r(A);
    R = algebra_R(A, cfg.order);
  } else {
    throw CLI::ValidationError("--family must be permutation, algebra or line");
  }
  if (!cfg.output.empty()) io::write_json(cfg.output, io::field_to_json(r));
  if (!cfg.output_R.empty()) io::write_json(cfg.output_R, io::diffeo_to_json(*R));
  if (cfg.output.empty() && cfg.output_R.empty()) {
    emit(cfg, {{"r", io::field_to_json(r)}, {"R", io::diffeo_to_json(*R)}}, out);
  }
  return kOk;
}

int cmd_compare(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto a = io::diffeo_from_json(io::read_json(cfg.input));
  const auto b = io::diffeo_from_json(io::read_json(cfg.input_b));
  if (a.space().coords() != b.space().coords()) {
    throw MismatchError("compare: maps live on different spaces (" + a.space().name() + " vs " +
                        b.space().name() + ")");
  }
  const int n = std::min(a.order(), b.order());
  const auto ta = a.truncated(n);
  const auto tb = b.truncated(n);
  json diffs = json::array();
  for (std::size_t j = 0; j < ta.space().dim(); ++j) {
    const HSeries d = ta.image(j) - tb.image(j);
    if (!d.is_zero()) {
      diffs.push_back({{"coord", ta.space().coords()[j]}, {"difference", d.to_string()}});
      err << "images of " << ta.space().coords()[j] << " differ by " << d.to_string() << "\n";
    }
  }
  emit(cfg, {{"equal", diffs.empty()}, {"common_order", n}, {"differences", diffs}}, out);
  return diffs.empty() ? kOk : kCheckFailed;
}

}  // namespace

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "verify-classical") return cmd_verify_classical(cfg, out, err);
    if (cfg.command == "verify-quantum") return cmd_verify_quantum(cfg, out, err);
    if (cfg.command == "classical-limit") return cmd_classical_limit(cfg, out, err);
    if (cfg.command == "quantize") return cmd_quantize(cfg, out, err);
    if (cfg.command == "lie-report") return cmd_lie_report(cfg, out, err);
    if (cfg.command == "example") return cmd_example(cfg, out, err);
    if (cfg.command == "compare") return cmd_compare(cfg, out, err);
    err << "unknown command '" << cfg.command << "'\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const MismatchError& e) {
    err << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const ExtractionError& e) {
    err << "extraction failed: " << e.what() << "\n";
    return kExtraction;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const io::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and quantization of geometric r-matrices"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto* vc = app.add_subcommand("verify-classical", "check CYBE and unitarity of a vector field on X x X");
  vc->add_option("--in", cfg.input, "vector field file")->required();
  vc->add_option("--report", cfg.report, "write the report here instead of stdout");

  auto* vq = app.add_subcommand("verify-quantum", "check QYBE and unitarity of a formal diffeomorphism");
  vq->add_option("--in", cfg.input, "formal diffeomorphism file")->required();
  vq->add_option("--report", cfg.report, "write the report here instead of stdout");

  auto* cl = app.add_subcommand("classical-limit", "hbar^1 part of a formal diffeomorphism as a vector field");
  cl->add_option("--in", cfg.input, "formal diffeomorphism file")->required();
  cl->add_option("--out", cfg.output, "write the field here instead of stdout");

  auto* qz = app.add_subcommand("quantize", "quantize a classical r-matrix");
  qz->add_option("--in", cfg.input, "vector field file")->required();
  qz->add_option("--order,-N", cfg.order, "truncation order")->capture_default_str();
  qz->add_option("--out", cfg.output, "write R here");
  qz->add_option("--report", cfg.report, "write the report here instead of stdout");

  auto* lr = app.add_subcommand("lie-report", "extract g+, V and the cocycle");
  lr->add_option("--in", cfg.input, "vector field file")->required();
  lr->add_option("--report", cfg.report, "write the report here instead of stdout");

  auto* ex = app.add_subcommand("example", "emit a closed-form family member");
  ex->add_option("--family", cfg.family, "permutation, algebra or line")
      ->required()
      ->check(CLI::IsMember({"permutation", "algebra", "line"}));
  ex->add_option("--n", cfg.n, "line family exponent")->check(CLI::PositiveNumber);
  ex->add_option("--c", cfg.c, "scalar c (line or scalar algebra)");
  ex->add_option("--order,-N", cfg.order, "truncation order of R")->capture_default_str();
  ex->add_option("--field", cfg.field, "vector field file on X (permutation)");
  ex->add_option("--monomial", cfg.monomial, "use v = x^k d/dx on the line (permutation)");
  ex->add_option("--algebra", cfg.algebra, "algebra file");
  ex->add_option("--matrix-c", cfg.matrix_c, "2x2 matrices with c = e11, identity or a,b,c,d");
  ex->add_option("--out-r", cfg.output, "write r here");
  ex->add_option("--out-R", cfg.output_R, "write R here");
  ex->add_option("--report", cfg.report, "write both here when no --out-* is given");

  auto* cp = app.add_subcommand("compare", "compare two formal diffeomorphisms up to common order");
  cp->add_option("--a", cfg.input, "first file")->required();
  cp->add_option("--b", cfg.input_b, "second file")->required();
  cp->add_option("--report", cfg.report, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace rquant::cli
