#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "madlie/conjugacy.hpp"
#include "madlie/errors.hpp"
#include "madlie/json_io.hpp"

using namespace madlie;

namespace {

struct Options {
  std::string command;
  std::string ring_path, algebra_path, element_path, candidate_path;
  std::string target_path, witness_path;
  std::string point_str, out_path;
  int m_max = 0;
  long seed = 0;
};

std::uint64_t fnv1a(const std::string& data, std::uint64_t h) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loader that folds every consumed byte into the report digest.
struct Inputs {
  std::uint64_t digest = 1469598103934665603ULL;

  void fold(const std::string& data) { digest = fnv1a(data, digest); }

  Json load(const std::string& path, const char* what) {
    if (path.empty())
      throw InputError(std::string("this command needs --") + what);
    std::string raw = read_file(path);
    fold(raw);
    try {
      return Json::parse(raw);
    } catch (const Json::parse_error& e) {
      throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
  }
};

std::map<std::string, Rational> parse_point(const std::string& text) {
  std::map<std::string, Rational> pt;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string part = text.substr(pos, comma - pos);
    std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw InputError("point assignments look like \"t=1\", got '" + part + "'");
    pt[part.substr(0, eq)] = rational_from_json(Json(part.substr(eq + 1)));
    pos = comma + 1;
  }
  if (pt.empty()) throw InputError("empty point assignment");
  return pt;
}

LieElement embed_constants(const LieElement& x, const RingSpec::Ptr& spec) {
  LieElement out(x.basis(), spec);
  for (int i = 0; i < x.dim(); ++i) {
    if (!x.coeff(i).is_constant())
      throw InputError("target element must have constant coefficients");
    out.set_coeff(i, RingElement::constant(spec, x.coeff(i).constant_value()));
  }
  return out;
}

Json diag_to_json(const DiagReport& d) {
  Json j;
  j["diagonalizable"] = d.is_diagonalizable;
  if (d.is_diagonalizable) {
    j["eigenvalues"] = rationals_to_json(d.eigenvalues);
    j["min_poly"] = rationals_to_json(d.min_poly);
  } else {
    j["failure_reason"] = to_string(*d.failure_reason);
  }
  return j;
}

Json certificate_to_json(const FreenessCertificate& c) {
  Json j;
  j["eigenvalue"] = to_string(c.eigenvalue);
  j["rank"] = c.rank;
  j["min_gens"] = c.min_gens;
  j["verdict"] = to_string(c.verdict);
  return j;
}

// Residual block demanded for every solved conjugation: the report itself
// shows group_act(witness, p) - p0 = 0.
Json verification_block(const GroupElement& w, const LieElement& p, const LieElement& p0) {
  LieElement residual = group_act(w, p) - embed_constants(p0, p.spec());
  Json j;
  j["checked"] = "group_act(witness, p) - target";
  j["residual"] = element_to_json(residual);
  j["residual_is_zero"] = residual.is_zero();
  return j;
}

Json conjugation_to_json(const ConjugationResult& res) {
  Json j;
  j["status"] = to_string(res.status);
  if (res.witness) j["witness"] = group_to_json(*res.witness);
  if (res.obstruction) j["certificate"] = certificate_to_json(*res.obstruction);
  if (!res.detail.empty()) j["detail"] = res.detail;
  if (!res.notes.empty()) j["notes"] = res.notes;
  return j;
}

Json run_quadric_demo() {
  auto q = RingSpec::make(RingKind::quotient, {"a", "b", "c"}, {"a^2+b*c-1"},
                          MonomialOrder::degrevlex, {},
                          std::map<std::string, Rational>{{"a", 1}, {"b", 0}, {"c", 0}},
                          true);
  auto basis = ChevalleyBasis::build(CartanMatrix::of_type('A', 1));
  LieElement p(basis, q);
  p.set_coeff(0, RingElement::parse(q, "a"));
  p.set_coeff(1, RingElement::parse(q, "b"));
  p.set_coeff(2, RingElement::parse(q, "c"));

  Json j;
  j["ring"] = ring_to_json(*q);
  j["element"] = element_to_json(p);
  j["diagnosis"] = diag_to_json(is_k_diagonalizable(p));
  RegularityReport reg = regularity(p);
  j["f_reg"] = reg.f_reg_value.to_string();
  j["regular"] = reg.is_regular;
  TraceReport tr = trace_invariants(p, 2 * p.dim());
  j["trace_constant"] = tr.constant;

  FreenessCertificate cert = freeness_certificate(p, Rational(2));
  Json fr = certificate_to_json(cert);
  Json gens = Json::array();
  for (const auto& g : cert.module.generators) {
    Json vec = Json::array();
    for (const auto& entry : g) vec.push_back(entry.to_string());
    gens.push_back(std::move(vec));
  }
  fr["generators"] = std::move(gens);
  j["freeness"] = std::move(fr);

  LieElement target = evaluate_element(p, {{"a", 1}, {"b", 0}, {"c", 0}});
  j["conjugation"] = conjugation_to_json(conjugate_regular(p, target));
  j["conclusion"] =
      "the eigenvalue-2 kernel of ad p is rank one projective but needs two "
      "generators, so it admits no free basis of eigenvectors and p cannot be "
      "conjugated to a constant diagonal form over this ring";
  return j;
}

Json run_dispatch(const Options& opt, Inputs& in) {
  Json report;
  report["command"] = opt.command;

  if (opt.command == "quadric-demo") {
    Json j = run_quadric_demo();
    j["command"] = opt.command;
    return j;
  }

  auto spec = ring_from_json(in.load(opt.ring_path, "ring"));
  auto basis = ChevalleyBasis::build(cartan_from_json(in.load(opt.algebra_path, "algebra")), 8);
  report["ring"] = ring_to_json(*spec);

  if (opt.command == "mad") {
    Json cj = in.load(opt.candidate_path, "candidate");
    if (!cj.contains("elements") || !cj["elements"].is_array())
      throw InputError("candidate file needs an 'elements' array");
    MadCandidate cand;
    for (const auto& ej : cj["elements"])
      cand.elements.push_back(element_from_json(ej, basis, spec));
    MadReport chk = mad_check(cand);
    report["dim"] = chk.dim;
    report["within_bound"] = chk.within_bound;
    report["maximal_by_dimension"] = chk.maximal_by_dimension;
    ConjugationResult res = mad_conjugate(cand);
    report.update(conjugation_to_json(res));
    if (res.witness) {
      Json images = Json::array();
      bool all_in_cartan = true;
      for (const auto& x : cand.elements) {
        LieElement img = group_act(*res.witness, x);
        for (int a = 0; a < basis->roots().num_roots(); ++a)
          all_in_cartan = all_in_cartan && img.root_coeff(a).is_zero();
        images.push_back(element_to_json(img));
      }
      report["images"] = std::move(images);
      report["verification"] = Json{{"checked", "images lie in the split Cartan"},
                                    {"all_in_cartan", all_in_cartan}};
    }
    return report;
  }

  LieElement p = element_from_json(in.load(opt.element_path, "element"), basis, spec);
  report["element"] = element_to_json(p);

  if (opt.command == "check-diag") {
    report.update(diag_to_json(is_k_diagonalizable(p)));
    return report;
  }
  if (opt.command == "regular") {
    RegularityReport reg = regularity(p);
    report["f_reg"] = reg.f_reg_value.to_string();
    report["regular"] = reg.is_regular;
    return report;
  }
  if (opt.command == "traces") {
    int m = opt.m_max > 0 ? opt.m_max : 2 * p.dim();
    TraceReport tr = trace_invariants(p, m);
    Json arr = Json::array();
    for (const auto& t : tr.traces) arr.push_back(t.to_string());
    report["m_max"] = m;
    report["traces"] = std::move(arr);
    report["trace_constant"] = tr.constant;
    return report;
  }
  if (opt.command == "eigenmodules") {
    Json arr = Json::array();
    for (const auto& em : eigenmodules(p)) {
      Json e;
      e["eigenvalue"] = to_string(em.eigenvalue);
      e["free_basis"] = em.free_basis;
      e["num_generators"] = em.module.generators.size();
      if (em.free_basis) e["rank"] = em.module.generators.size();
      Json gens = Json::array();
      for (const auto& g : em.module.generators) {
        Json vec = Json::array();
        for (const auto& entry : g) vec.push_back(entry.to_string());
        gens.push_back(std::move(vec));
      }
      e["generators"] = std::move(gens);
      arr.push_back(std::move(e));
    }
    report["eigenmodules"] = std::move(arr);
    return report;
  }
  if (opt.command == "conjugate") {
    LieElement p0(basis, spec);
    if (!opt.target_path.empty()) {
      p0 = element_from_json(in.load(opt.target_path, "target"), basis, spec);
    } else {
      auto pt = opt.point_str.empty() ? designated_point(*spec) : parse_point(opt.point_str);
      p0 = embed_constants(evaluate_element(p, pt), spec);
    }
    report["target"] = element_to_json(p0);
    ConjugationResult res = conjugate_regular(p, p0);
    report.update(conjugation_to_json(res));
    if (res.witness) report["verification"] = verification_block(*res.witness, p, p0);
    return report;
  }
  if (opt.command == "lift") {
    LieElement p0 = element_from_json(in.load(opt.target_path, "target"), basis, spec);
    GroupElement pbar =
        group_from_json(in.load(opt.witness_path, "witness"), basis, RingSpec::rationals());
    int rounds = 0;
    GroupElement w = nilpotent_lift(p, p0, pbar, &rounds);
    report["status"] = "solved";
    report["rounds"] = rounds;
    report["witness"] = group_to_json(w);
    report["verification"] = verification_block(w, p, p0);
    return report;
  }
  throw InputError("unknown command '" + opt.command + "'");
}

Json run_command(const Options& opt) {
  Inputs in;
  in.fold(opt.command);
  in.fold(opt.point_str);
  in.fold(std::to_string(opt.m_max));
  in.fold(std::to_string(opt.seed));
  Json report = run_dispatch(opt, in);
  report["input_digest"] = hex64(in.digest);
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact diagnostics and conjugacy for split semisimple Lie algebras over commutative rings"};
  Options opt;
  app.add_option("command", opt.command, "one of: check-diag, regular, traces, eigenmodules, conjugate, mad, lift, quadric-demo")
      ->required()
      ->check(CLI::IsMember({"check-diag", "regular", "traces", "eigenmodules",
                             "conjugate", "mad", "lift", "quadric-demo"}));
  app.add_option("--ring", opt.ring_path, "ring spec JSON file");
  app.add_option("--algebra", opt.algebra_path, "Cartan matrix JSON file");
  app.add_option("--element", opt.element_path, "Lie element JSON file");
  app.add_option("--candidate", opt.candidate_path, "commuting-family JSON file (mad)");
  app.add_option("--target", opt.target_path, "target element JSON file (conjugate, lift)");
  app.add_option("--witness", opt.witness_path, "reduced witness JSON file (lift)");
  app.add_option("--m-max", opt.m_max, "largest trace power (traces)");
  app.add_option("--point", opt.point_str, "point assignment like \"t=1\"");
  app.add_option("--seed", opt.seed, "seed recorded in the digest");
  app.add_option("--out", opt.out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  Json report;
  int code = 0;
  try {
    report = run_command(opt);
  } catch (const InputError& e) {
    report = Json{{"error", e.what()}};
    code = 2;
  } catch (const ResourceLimitError& e) {
    report = Json{{"error", e.what()}};
    code = 3;
  } catch (const std::exception& e) {
    report = Json{{"error", e.what()}};
    code = 4;
  }

  std::string text = report.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << opt.out_path << "'\n";
      return 2;
    }
    out << text;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "wall_ms " << ms << "\n";
  return code;
}
