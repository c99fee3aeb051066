#include "adelic/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "adelic/sampling.hpp"
#include "adelic/shadow.hpp"
#include "adelic/textio.hpp"
#include "adelic/weil.hpp"
#include "json.hpp"

namespace adelic {

namespace {

using nlohmann::json;

// divisors of the form 1*(P)-1*O (or 0) name a point for the Miller method
EcPoint point_from_class(const Divisor& D, const CurveModel& curve) {
  if (D.is_zero()) return EcPoint::origin();
  const Place origin = Place::ec_origin(curve.base());
  if (D.terms().size() == 2 && D.coeff(origin) == -1) {
    for (const auto& [x, c] : D.terms()) {
      if (x.kind() == Place::Kind::EcAffine && c == 1) return point_of(curve, x);
    }
  }
  throw DomainError("the miller method needs divisors of the form 1*(P)-1*O; got " + D.to_string());
}

struct Output {
  bool as_json = false;
  json j;
  std::ostringstream plain;
  std::string result;  // canonical final line

  void line(const std::string& s) {
    if (!as_json) plain << s << "\n";
  }
  std::string str() {
    if (as_json) {
      j["result"] = result;
      return j.dump() + "\n";
    }
    plain << result << "\n";
    return plain.str();
  }
};

int selftest_battery(Output& out, int samples, std::uint64_t seed);

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"exact tame-symbol, idele-pairing and Weil-pairing calculator"};
  app.require_subcommand(1);

  std::string curve_s, f_s, g_s, place_s, a_s, b_s, D_s, Dp_s, method = "adelic";
  std::string setup_path, elem_a, elem_ap, elem_b, elem_c, elem_bp, elem_cp;
  std::int64_t m = 0, value = 0;
  std::uint64_t seed = 20240817;
  int samples = 25;
  bool norm_flag = false, unsigned_flag = false;
  std::string format = "plain";
  app.add_option("--seed", seed, "seed for randomized internals");
  app.add_option("--format", format, "plain|json")->check(CLI::IsMember({"plain", "json"}));

  auto* tame_cmd = app.add_subcommand("tame", "tame symbol (f,g)_x at a place");
  tame_cmd->add_option("--curve", curve_s)->required();
  tame_cmd->add_option("--f", f_s)->required();
  tame_cmd->add_option("--g", g_s)->required();
  tame_cmd->add_option("--place", place_s)->required();
  tame_cmd->add_flag("--norm", norm_flag, "norm the symbol down to the base field");

  auto* recip_cmd = app.add_subcommand("reciprocity", "product of tame symbol norms over all places");
  recip_cmd->add_option("--curve", curve_s)->required();
  recip_cmd->add_option("--f", f_s)->required();
  recip_cmd->add_option("--g", g_s)->required();

  auto* comm_cmd = app.add_subcommand("commutator", "signed commutator pairing of two ideles");
  comm_cmd->add_option("--curve", curve_s)->required();
  comm_cmd->add_option("--a", a_s)->required();
  comm_cmd->add_option("--b", b_s)->required();
  comm_cmd->add_flag("--unsigned", unsigned_flag, "drop the (-1)^(deg deg) sign");

  auto* weil_cmd = app.add_subcommand("weil", "Weil pairing of m-torsion divisor classes");
  weil_cmd->add_option("--curve", curve_s)->required();
  weil_cmd->add_option("--m", m)->required();
  weil_cmd->add_option("--D", D_s)->required();
  weil_cmd->add_option("--Dp", Dp_s)->required();
  weil_cmd->add_option("--method", method)->check(CLI::IsMember({"adelic", "disjoint", "miller"}));

  auto* rr_cmd = app.add_subcommand("rr", "Riemann-Roch space of a divisor");
  rr_cmd->add_option("--curve", curve_s)->required();
  rr_cmd->add_option("--D", D_s)->required();

  auto* tor_cmd = app.add_subcommand("torsion", "certify a divisor class as m-torsion");
  tor_cmd->add_option("--curve", curve_s)->required();
  tor_cmd->add_option("--D", D_s)->required();
  tor_cmd->add_option("--m", m)->required();

  auto* biext_cmd = app.add_subcommand("biext", "finite quotient-biextension lab");
  std::string action;
  biext_cmd->add_option("action", action, "validate|transport|weil")
      ->required()
      ->check(CLI::IsMember({"validate", "transport", "weil"}));
  biext_cmd->add_option("--setup", setup_path, "setup file")->required();
  biext_cmd->add_option("--a", elem_a);
  biext_cmd->add_option("--ap", elem_ap);
  biext_cmd->add_option("--value", value);
  biext_cmd->add_option("--b", elem_b);
  biext_cmd->add_option("--c", elem_c);
  biext_cmd->add_option("--bp", elem_bp);
  biext_cmd->add_option("--cp", elem_cp);
  biext_cmd->add_option("--m", m);

  auto* self_cmd = app.add_subcommand("selftest", "run the invariant suite");
  self_cmd->add_option("--samples", samples, "sample count per property");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  Output out;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    os << app.help();
    return {0, os.str()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("usage error: ") + e.what() + "\n"};
  }
  out.as_json = format == "json";

  try {
    if (tame_cmd->parsed()) {
      CurveModel curve = parse_curve(curve_s);
      auto f = parse_function(f_s, curve);
      auto g = parse_function(g_s, curve);
      auto x = parse_place(place_s, curve);
      out.j["verb"] = "tame";
      out.line("curve: " + curve.to_string());
      FieldElement v = norm_flag ? tame_symbol_norm(f, g, x) : tame_symbol(f, g, x);
      if (!norm_flag) {
        out.line("residue field: " + field_spec_to_string(x.residue_spec()));
        out.j["residue_field"] = field_spec_to_string(x.residue_spec());
      }
      out.result = v.to_string();
    } else if (recip_cmd->parsed()) {
      CurveModel curve = parse_curve(curve_s);
      auto v = weil_reciprocity(parse_function(f_s, curve), parse_function(g_s, curve));
      out.j["verb"] = "reciprocity";
      out.result = v.to_string();
    } else if (comm_cmd->parsed()) {
      CurveModel curve = parse_curve(curve_s);
      auto a = parse_idele(a_s, curve);
      auto b = parse_idele(b_s, curve);
      out.j["verb"] = "commutator";
      out.line("deg a = " + std::to_string(a.degree()) + ", deg b = " + std::to_string(b.degree()));
      FieldElement v = unsigned_flag ? norm_symbol_product(a, b) : commutator_pairing(a, b);
      out.result = v.to_string();
    } else if (weil_cmd->parsed()) {
      CurveModel curve = parse_curve(curve_s);
      Divisor D = parse_divisor(D_s, curve);
      Divisor Dp = parse_divisor(Dp_s, curve);
      FieldElement v = FieldElement::one(curve.base());
      if (method == "adelic") {
        v = weil_pairing_adelic(D, Dp, m, curve);
      } else if (method == "disjoint") {
        v = weil_pairing_disjoint(D, Dp, m, curve);
      } else {
        v = weil_pairing_miller(point_from_class(D, curve), point_from_class(Dp, curve), m, curve,
                                seed);
      }
      out.j["verb"] = "weil";
      out.j["method"] = method;
      out.j["value"] = v.to_string();
      out.j["order"] = multiplicative_order(v);
      out.result = v.to_string() + " (order " + std::to_string(multiplicative_order(v)) + ")";
    } else if (rr_cmd->parsed()) {
      CurveModel curve = parse_curve(curve_s);
      auto rr = riemann_roch(parse_divisor(D_s, curve), curve);
      out.j["verb"] = "rr";
      out.j["h0"] = rr.h0;
      out.j["h1"] = rr.h1;
      json basis = json::array();
      for (const auto& f : rr.basis) {
        out.line("basis: " + f.to_string());
        basis.push_back(f.to_string());
      }
      out.j["basis"] = basis;
      out.result = "h0=" + std::to_string(rr.h0) + " h1=" + std::to_string(rr.h1);
    } else if (tor_cmd->parsed()) {
      CurveModel curve = parse_curve(curve_s);
      auto f = certify_m_torsion(parse_divisor(D_s, curve), m, curve);
      out.j["verb"] = "torsion";
      out.result = f ? f->to_string() : "absent";
    } else if (biext_cmd->parsed()) {
      std::ifstream in(setup_path);
      if (!in) throw ParseError("cannot open setup file '" + setup_path + "'", 0);
      std::stringstream buf;
      buf << in.rdbuf();
      auto setup = parse_biext_setup(buf.str());
      out.j["verb"] = "biext";
      out.j["action"] = action;
      if (action == "validate") {
        auto rep = biext::validate_setup(setup);
        json items = json::array();
        for (const auto& it : rep.items) {
          out.line(std::string(it.pass ? "PASS " : "FAIL ") + it.condition +
                   (it.witness.empty() ? "" : " witness: " + it.witness));
          items.push_back({{"condition", it.condition}, {"pass", it.pass}, {"witness", it.witness}});
        }
        out.j["items"] = items;
        out.result = rep.all_pass() ? "pass" : "fail";
      } else if (action == "transport") {
        biext::TorsorPoint t{parse_group_element(elem_a, setup.A),
                             parse_group_element(elem_ap, setup.Ap), value};
        auto moved = biext::transport(t, parse_group_element(elem_b, setup.A),
                                      parse_group_element(elem_c, setup.A),
                                      parse_group_element(elem_bp, setup.Ap),
                                      parse_group_element(elem_cp, setup.Ap), setup);
        out.result = "[" + biext::FinAbGroup::elem_to_string(moved.a) + "," +
                     biext::FinAbGroup::elem_to_string(moved.ap) + "," +
                     std::to_string(moved.value) + "]";
      } else {
        auto v = biext::quotient_weil_pairing(parse_group_element(elem_a, setup.A),
                                              parse_group_element(elem_ap, setup.Ap), m, setup);
        out.result = std::to_string(v);
      }
    } else if (self_cmd->parsed()) {
      out.j["verb"] = "selftest";
      int code = selftest_battery(out, samples, seed);
      return {code, out.str()};
    }
  } catch (const ParseError& e) {
    return {2, std::string("parse error: ") + e.what() + "\n"};
  } catch (const StructureError& e) {
    return {2, std::string("invalid input: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {3, std::string("domain error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }
  return {0, out.str()};
}

namespace {

int selftest_battery(Output& out, int samples, std::uint64_t seed) {
  bool ok = true;
  auto suite = [&](const std::string& name, auto&& body) {
    bool pass = true;
    std::string detail;
    try {
      body();
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    ok = ok && pass;
    out.line(std::string(pass ? "ok   " : "FAIL ") + name + (detail.empty() ? "" : ": " + detail));
  };
  auto expect = [](bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
  };

  auto f5 = FieldSpec::prime_field(5);
  auto f7 = FieldSpec::prime_field(7);
  std::vector<CurveModel> curves = {
      CurveModel::projective_line(f5),
      CurveModel::projective_line(FieldSpec::extension(3, 2, {1, 0, 1})),
      CurveModel::elliptic(f5, FieldElement::from_int(f5, -1), FieldElement::zero(f5)),
      CurveModel::elliptic(f7, FieldElement::zero(f7), FieldElement::from_int(f7, 2))};

  suite("field axioms and factorization round-trip", [&] {
    std::mt19937_64 rng(seed);
    for (auto spec : {f5, FieldSpec::extension(3, 2, {1, 0, 1})}) {
      for (int i = 0; i < samples; ++i) {
        auto a = sampling::random_element(spec, rng);
        auto b = sampling::random_element(spec, rng);
        expect((a * b) * b == a * (b * b), "associativity");
        if (!a.is_zero()) expect((a * a.inverse()).is_one(), "inverses");
        auto f = sampling::random_nonzero_poly(spec, 8, rng);
        auto fac = factor(f, seed + static_cast<std::uint64_t>(i));
        Polynomial prod = Polynomial::constant(fac.unit);
        for (const auto& term : fac.terms) prod = prod * term.factor.pow(term.multiplicity);
        expect(prod == f, "factor round-trip");
      }
    }
  });

  suite("Weil reciprocity on random pairs", [&] {
    for (const auto& c : curves) {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < samples; ++i)
        expect(weil_reciprocity(sampling::random_function(c, rng),
                                sampling::random_function(c, rng))
                   .is_one(),
               "reciprocity product != 1 on " + c.to_string());
    }
  });

  suite("commutator pairing laws", [&] {
    for (const auto& c : curves) {
      std::mt19937_64 rng(seed ^ 0xabcdef);
      auto one = FieldElement::one(c.base());
      for (int i = 0; i < samples / 2 + 1; ++i) {
        auto a1 = sampling::random_degree0_idele(c, rng);
        auto a2 = sampling::random_degree0_idele(c, rng);
        auto b = sampling::random_degree0_idele(c, rng);
        expect(commutator_pairing(a1 * a2, b) ==
                   commutator_pairing(a1, b) * commutator_pairing(a2, b),
               "bilinearity");
        expect(commutator_pairing(a1, b) * commutator_pairing(b, a1) == one, "skew-symmetry");
      }
    }
  });

  suite("section-3 conditions", [&] {
    for (const auto& c : curves)
      expect(check_section3_conditions(c, samples, seed).all_pass(), "conditions on " + c.to_string());
  });

  suite("Riemann-Roch dimension law", [&] {
    for (const auto& c : curves) {
      std::mt19937_64 rng(seed + 5);
      for (int i = 0; i < samples; ++i) {
        Divisor d = sampling::random_divisor(c, rng);
        auto rr = riemann_roch(d, c);
        expect(rr.h0 - rr.h1 == d.degree() + 1 - c.genus(), "chi mismatch");
      }
    }
  });

  suite("adelic Weil pairing equals the Miller oracle on E[2] and E[3]", [&] {
    struct Case {
      CurveModel curve;
      std::int64_t m;
    };
    std::vector<Case> cases = {{curves[2], 2}, {curves[3], 3}};
    for (const auto& cse : cases) {
      auto pts = torsion_points(cse.curve, cse.m);
      for (const auto& p : pts)
        for (const auto& q : pts) {
          auto va = weil_pairing_adelic(point_class_divisor(cse.curve, p),
                                        point_class_divisor(cse.curve, q), cse.m, cse.curve);
          expect(va == weil_pairing_miller(p, q, cse.m, cse.curve, seed), "oracle mismatch");
        }
    }
  });

  suite("curve shadow matches the adelic pairing", [&] {
    auto shadow = curve_shadow_setup(curves[2]);
    expect(biext::validate_setup(shadow.setup).all_pass(), "shadow setup conditions");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        auto fv = biext::quotient_weil_pairing(shadow.alpha_classes[i], shadow.alpha_classes[j], 2,
                                               shadow.setup);
        auto av = weil_pairing_adelic(point_class_divisor(curves[2], shadow.points[i]),
                                      point_class_divisor(curves[2], shadow.points[j]), 2, curves[2]);
        expect(fv == discrete_log(av, shadow.n_generator), "shadow value mismatch");
      }
  });

  out.result = ok ? "selftest: pass" : "selftest: fail";
  out.j["pass"] = ok;
  return ok ? 0 : 1;
}

}  // namespace

}  // namespace adelic
