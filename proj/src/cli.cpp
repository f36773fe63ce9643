#include "carmichael/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "carmichael/repro.hpp"
#include "carmichael/serialize.hpp"
#include "carmichael/text.hpp"

namespace carmichael::cli {

namespace {

struct Options {
  std::string field = "2";
  std::string modulus;
  std::string format = "json";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t enum_cap = 0;  // 0: CARMICHAEL_ENUM_CAP or the built-in default

  std::string poly, g, h, u, a, P, Q, cards, want = "breaks";
  std::uint64_t n = 0, limit = 0;
  unsigned degree = 0, order = 1, ell = 2, budget = kDefaultDegreeBudget, degree_cap = 8;
};

Field field_of(const Options& o) {
  return parse_field(o.field, o.modulus.empty() ? std::nullopt : std::optional<std::string_view>(o.modulus));
}

std::string tsv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.format != "tsv") {
    out << j.dump() << '\n';
    return;
  }
  if (j.is_object()) {
    std::string keys, values;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!keys.empty()) {
        keys += '\t';
        values += '\t';
      }
      keys += it.key();
      values += tsv_cell(it.value());
    }
    out << keys << '\n' << values << '\n';
  } else if (j.is_array()) {
    for (auto& v : j) out << tsv_cell(v) << '\n';
  } else {
    out << tsv_cell(j) << '\n';
  }
}

WitnessGoal parse_goal(const std::string& s) {
  if (s == "makes") return WitnessGoal::MakesCarmichael;
  if (s == "breaks") return WitnessGoal::BreaksCarmichael;
  fail(ErrorKind::ParseError, "--want must be 'makes' or 'breaks'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Carmichael numbers, rings and polynomials over finite fields", "carmichael"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", o.seed, "Seed for equal-degree factor splitting");
  app.add_option("--jobs", o.jobs, "Worker threads for count-brute and ext-witness")->check(CLI::Range(1u, 256u));
  app.add_option("--enum-cap", o.enum_cap, "Enumeration cap (overrides CARMICHAEL_ENUM_CAP)");

  std::map<std::string, std::function<Json()>> actions;
  std::function<int()> repro_action;

  auto with_field = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "Field: p or p^e")->capture_default_str();
    sub->add_option("--modulus", o.modulus, "Extension modulus c0,c1,...,ce");
    return sub;
  };
  auto command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto cap = [&] { return o.enum_cap ? o.enum_cap : default_enum_cap(); };

  {
    auto* sub = with_field(command("test", "Korselt test for a polynomial"));
    sub->add_option("--poly", o.poly, "Polynomial")->required();
    actions["test"] = [&] {
      const Field f = field_of(o);
      return to_json(f, is_carmichael_poly(f, parse_poly(f, o.poly), o.seed));
    };
  }
  {
    auto* sub = command("test-number", "Korselt test for an integer");
    sub->add_option("--n", o.n, "Integer n >= 1")->required();
    actions["test-number"] = [&] { return to_json(Field::create(2), is_carmichael_number(o.n)); };
  }
  {
    auto* sub = command("test-ring", "Carmichael ring test for F_q1 x ... x F_qk or Z/nZ");
    auto* cards = sub->add_option("--cards", o.cards, "Field cardinalities q1,...,qk");
    auto* n = sub->add_option("--n", o.n, "Modulus n for Z/nZ");
    cards->excludes(n);
    actions["test-ring"] = [&, cards] {
      if (cards->count() > 0) {
        const auto pres = make_ring_presentation(parse_uint_list(o.cards));
        return Json{{"verdict", is_carmichael_ring(pres)}, {"presentation", to_json(pres)}};
      }
      if (o.n == 0) fail(ErrorKind::ParseError, "test-ring needs --cards or --n");
      const auto r = carmichael_ring_from_modulus(o.n);
      return Json{{"verdict", r.verdict},
                  {"presentation", r.presentation ? to_json(*r.presentation) : Json("NotSemisimple")}};
    };
  }
  {
    auto* sub = with_field(command("rigid", "Rigid Carmichael test of order d (polynomial or integer)"));
    auto* poly = sub->add_option("--poly", o.poly, "Polynomial");
    auto* n = sub->add_option("--n", o.n, "Integer");
    poly->excludes(n);
    sub->add_option("--order", o.order, "Order d >= 1")->required();
    actions["rigid"] = [&, poly] {
      if (poly->count() > 0) {
        const Field f = field_of(o);
        return to_json(f, is_rigid_carmichael_poly(f, parse_poly(f, o.poly), o.order, o.seed));
      }
      if (o.n == 0) fail(ErrorKind::ParseError, "rigid needs --poly or --n");
      return to_json(Field::create(2), is_rigid_carmichael_number(o.n, o.order));
    };
  }
  {
    auto* sub = with_field(command("pi", "Number of monic irreducibles of a degree"));
    sub->add_option("--degree", o.degree, "Degree n >= 1")->required();
    actions["pi"] = [&] { return Json{{"pi", to_decimal(pi_q(field_of(o), o.degree))}}; };
  }
  {
    auto* sub = with_field(command("count", "Exact number of monic Carmichael polynomials of a degree"));
    sub->add_option("--degree", o.degree, "Degree n >= 1")->required();
    actions["count"] = [&] { return Json{{"C", to_decimal(count_carmichael_exact(field_of(o), o.degree))}}; };
  }
  {
    auto* sub = with_field(command("count-brute", "Count Carmichael polynomials by exhaustive testing"));
    sub->add_option("--degree", o.degree, "Degree n >= 1")->required();
    actions["count-brute"] = [&] {
      return Json{{"C", to_decimal(count_carmichael_bruteforce(field_of(o), o.degree, o.jobs, cap()))}};
    };
  }
  {
    auto* sub = with_field(command("table", "Table of pi_q(n), C_q(n) and the lower bound"));
    sub->add_option("--max-degree", o.degree, "Largest n")->required();
    actions["table"] = [&] {
      const auto t = count_table(field_of(o).q(), o.degree);
      if (o.format == "tsv") {
        out << to_tsv(t);
        return Json();
      }
      return to_json(t);
    };
  }
  {
    auto* sub = command("numbers", "Carmichael numbers up to a limit");
    sub->add_option("--limit", o.limit, "Upper limit")->required();
    actions["numbers"] = [&] { return Json(enumerate_carmichael_numbers(o.limit)); };
  }
  {
    auto* sub = with_field(command("construct", "Carmichael multiple u*w of a square-free u"));
    sub->add_option("--u", o.u, "Square-free seed polynomial")->required();
    sub->add_option("--g", o.g, "Progression modulus (default 1)");
    sub->add_option("--h", o.h, "Progression residue (default 0)");
    sub->add_option("--budget", o.budget, "Largest product degree")->capture_default_str();
    actions["construct"] = [&] {
      const Field f = field_of(o);
      const Poly g = o.g.empty() ? Poly::constant(f.one()) : parse_poly(f, o.g);
      const Poly h = o.h.empty() ? Poly() : parse_poly(f, o.h);
      return to_json(f, carmichael_multiple(f, parse_poly(f, o.u), g, h, o.budget));
    };
  }
  {
    auto* sub = with_field(command("construct-ap", "Carmichael polynomial P1*P2 congruent to h mod g"));
    sub->add_option("--g", o.g, "Progression modulus")->required();
    sub->add_option("--h", o.h, "Progression residue")->required();
    sub->add_option("--budget", o.budget, "Largest product degree")->capture_default_str();
    actions["construct-ap"] = [&] {
      const Field f = field_of(o);
      return to_json(f, carmichael_in_ap(f, parse_poly(f, o.g), parse_poly(f, o.h), o.budget));
    };
  }
  {
    auto* sub = with_field(command("construct-rigid", "Rigid Carmichael polynomial of order d"));
    sub->add_option("--order", o.order, "Order d >= 1")->required();
    sub->add_option("--degree", o.degree, "Degree of each irreducible factor")->required();
    actions["construct-rigid"] = [&] {
      const Field f = field_of(o);
      return to_json(f, rigid_construct(f, o.order, o.degree));
    };
  }
  {
    auto* sub = with_field(command("symbol", "l-th power residue symbol (a/P)_l"));
    sub->add_option("--a", o.a, "Numerator polynomial")->required();
    sub->add_option("--P", o.P, "Monic irreducible")->required();
    sub->add_option("--ell", o.ell, "Prime l dividing q-1")->capture_default_str();
    actions["symbol"] = [&] {
      const Field f = field_of(o);
      return to_json(f, power_residue_symbol(f, parse_poly(f, o.a), parse_poly(f, o.P), o.ell));
    };
  }
  {
    auto* sub = with_field(command("splitting", "Splitting of P in F_q(t)(Q^(1/l))"));
    sub->add_option("--P", o.P, "Irreducible P")->required();
    sub->add_option("--Q", o.Q, "Irreducible Q")->required();
    sub->add_option("--ell", o.ell, "Prime l dividing q-1")->capture_default_str();
    actions["splitting"] = [&] {
      const Field f = field_of(o);
      return to_json(f, splitting_in_kummer(f, parse_poly(f, o.P), parse_poly(f, o.Q), o.ell));
    };
  }
  {
    auto* sub = with_field(command("ext-test", "Carmichael test for g in F_q(t)(Q^(1/l))"));
    sub->add_option("--poly", o.poly, "Square-free g")->required();
    sub->add_option("--Q", o.Q, "Irreducible Q coprime to g")->required();
    sub->add_option("--ell", o.ell, "Prime l dividing q-1")->capture_default_str();
    actions["ext-test"] = [&] {
      const Field f = field_of(o);
      const Poly g = parse_poly(f, o.poly);
      const Poly Q = parse_poly(f, o.Q);
      Json j = to_json(f, is_carmichael_in_kummer(f, g, Q, o.ell, o.seed));
      Json split = Json::array();
      for (auto& s : kummer_splitting(f, g, Q, o.ell, o.seed)) split.push_back(to_json(f, s));
      j["splitting"] = split;
      return j;
    };
  }
  {
    auto* sub = with_field(command("ext-witness", "Search Q making g Carmichael (or not) in F_q(t)(Q^(1/l))"));
    sub->add_option("--poly", o.poly, "Square-free g")->required();
    sub->add_option("--ell", o.ell, "Prime l dividing q-1")->capture_default_str();
    sub->add_option("--want", o.want, "makes or breaks")->check(CLI::IsMember({"makes", "breaks"}))->capture_default_str();
    sub->add_option("--degree-cap", o.degree_cap, "Largest degree of Q")->capture_default_str();
    actions["ext-witness"] = [&] {
      const Field f = field_of(o);
      const Poly g = parse_poly(f, o.poly);
      const Poly Q = find_kummer_witness(f, g, o.ell, parse_goal(o.want), o.degree_cap, o.jobs, o.seed);
      return Json{{"Q", format_poly(f, Q)}, {"report", to_json(f, is_carmichael_in_kummer(f, g, Q, o.ell, o.seed))}};
    };
  }
  command("repro", "Check the reference constants and worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    const auto used = app.get_subcommands();
    err << (used.empty() ? app.help() : used.front()->help());
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "repro") return run_checks(reference_checks(), out);
  try {
    const Json result = actions.at(name)();
    if (!result.is_null()) emit(result, o, out);
    return 0;
  } catch (const Error& e) {
    out << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace carmichael::cli
