#include "g2branch/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "g2branch/serialize.hpp"

namespace g2branch::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string pair = "so7-g2";
  std::string parabolic;
  std::string lambda;
  std::string format = "json";
  std::string hypothesis;
  int depth = 12;
  std::optional<std::uint64_t> seed;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

ParabolicSpec parse_parabolic(std::string_view name, PairId pair) {
  const AlgebraId algebra = ambient_algebra(pair);
  auto need = [&](AlgebraId wanted) {
    if (wanted != algebra) {
      throw UsageError("parabolic '" + std::string(name) + "' is not a parabolic of the ambient algebra of " +
                       std::string(pair_name(pair)));
    }
  };
  if (name == "borel") return ParabolicSpec::borel(algebra);
  if (name == "full") return ParabolicSpec::full(algebra);
  if (name == "p-e2-e3") {
    need(AlgebraId::So7);
    return ParabolicSpec(AlgebraId::So7, {"e2-e3"});
  }
  if (name == "p-e1-e2-e3") {
    need(AlgebraId::So7);
    return ParabolicSpec(AlgebraId::So7, {"e1-e2", "e3"});
  }
  if (name == "p-a1") {
    need(AlgebraId::G2);
    return ParabolicSpec(AlgebraId::G2, {"a1"});
  }
  if (name == "p-a2") {
    need(AlgebraId::G2);
    return ParabolicSpec(AlgebraId::G2, {"a2"});
  }
  if (name.size() >= 2 && name.front() == '{' && name.back() == '}') {
    unsigned mask = 0;
    const auto inner = name.substr(1, name.size() - 2);
    if (!inner.empty()) {
      for (const auto& label : split(inner, ',')) {
        const std::size_t index = root_index(algebra, label);
        if (index >= rank(algebra)) throw UsageError("'" + label + "' is not a simple root");
        mask |= 1u << index;
      }
    }
    return ParabolicSpec::from_mask(algebra, mask);
  }
  throw UsageError("unknown parabolic '" + std::string(name) +
                   "' (expected borel, p-e2-e3, p-e1-e2-e3, p-a1, p-a2, full or {root,...})");
}

Weight parse_weight(std::string_view text, AlgebraId algebra) {
  std::vector<Rational> coords;
  for (const auto& part : split(text, ',')) coords.push_back(Rational::parse(part));
  return Weight(algebra, std::move(coords));
}

json atoms_json(const std::vector<ConditionAtom>& atoms) {
  json out = json::array();
  for (const auto& a : atoms) out.push_back(a.label());
  return out;
}

std::string atoms_text(const std::vector<ConditionAtom>& atoms) {
  std::string out;
  for (const auto& a : atoms) out += (out.empty() ? "" : "; ") + a.label();
  return out.empty() ? "none" : out;
}

void require_format(const Options& o, bool latex_allowed) {
  if (o.format == "latex" && !latex_allowed) throw UsageError("--format latex is only available for decompose");
}

// λ from --lambda, or sampled from the case's generic set with --seed.
Weight lambda_for(const Options& o, PairId pair, std::optional<CaseId> id) {
  if (!o.lambda.empty()) return parse_weight(o.lambda, ambient_algebra(pair));
  if (o.seed && id) return sample_generic(generic_hypothesis(*id).name, *o.seed);
  throw UsageError(id ? "--lambda or --seed is required" : "--lambda is required");
}

int cmd_compat(const Options& o, std::ostream& out) {
  require_format(o, false);
  const PairId pair = parse_pair(o.pair);
  std::vector<ParabolicSpec> todo;
  if (o.parabolic.empty()) {
    todo = all_standard_parabolics(ambient_algebra(pair));
  } else {
    todo.push_back(parse_parabolic(o.parabolic, pair));
  }
  json rows = json::array();
  json compatible = json::array();
  std::ostringstream text;
  for (const auto& p : todo) {
    const auto w = is_compatible(p, pair);
    json row = {{"parabolic", p.label()}, {"compatible", w.has_value()}};
    row["witness"] = w ? json_of(*w) : json(nullptr);
    row["intersection"] = w ? json(intersect_parabolic(p, pair).label()) : json(nullptr);
    rows.push_back(row);
    text << pair_name(pair) << " " << p.label();
    if (w) {
      compatible.push_back(p.label());
      text << " compatible witness (" << w->a << "," << w->b << ") intersection "
           << intersect_parabolic(p, pair).label() << "\n";
    } else {
      text << " not compatible\n";
    }
  }
  if (o.format == "text") {
    out << text.str();
  } else if (o.parabolic.empty()) {
    out << json{{"pair", std::string(pair_name(pair))}, {"compatible", compatible}, {"parabolics", rows}}.dump(2)
        << "\n";
  } else {
    json single = rows.front();
    single["pair"] = std::string(pair_name(pair));
    out << single.dump(2) << "\n";
  }
  return kExitOk;
}

struct CaseInput {
  PairId pair;
  ParabolicSpec parabolic;
  CaseId id;
  Weight lambda;
};

CaseInput case_input(const Options& o) {
  const PairId pair = parse_pair(o.pair);
  if (o.parabolic.empty()) throw UsageError("--parabolic is required");
  const ParabolicSpec p = parse_parabolic(o.parabolic, pair);
  const CaseId id = case_for(pair, p);
  return {pair, p, id, lambda_for(o, pair, id)};
}

// A module-level claim needs the case's generic set and a certified simple ambient module.
bool module_level(const CaseInput& in) {
  if (!in_hypothesis(generic_hypothesis(in.id), in.lambda).holds) return false;
  return jantzen_simple(in.parabolic, in.lambda).certified;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const CaseInput in = case_input(o);
  const Decomposition dec = enumerate(in.id, in.lambda, o.depth);
  const auto hyp = in_hypothesis(generic_hypothesis(in.id), in.lambda);
  const bool module = module_level(in);
  const std::string claim = module ? "direct sum of simple modules" : "Grothendieck group identity";
  if (o.format == "latex") {
    out << latex_document(dec, module);
  } else if (o.format == "text") {
    out << text_of(dec) << "claim: " << claim << " (" << generic_hypothesis(in.id).name
        << (hyp.holds ? " holds" : " fails: " + atoms_text(hyp.failing)) << ")\n";
  } else {
    json j = json_of(dec);
    j["hypothesis"] = {{"name", generic_hypothesis(in.id).name},
                       {"holds", hyp.holds},
                       {"failing_atoms", atoms_json(hyp.failing)}};
    j["claim"] = claim;
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, false);
  const CaseInput in = case_input(o);
  const Decomposition closed = enumerate(in.id, in.lambda, o.depth);
  std::optional<Decomposition> peeled;
  std::optional<OracleFailureReport> failure;
  try {
    peeled = peel(module_character(Side::Ambient, in.id, in.lambda, o.depth), in.id, in.lambda);
  } catch (const OracleFailure& e) {
    failure = e.report();
  }
  const auto hom = hom_grid(in.id, in.lambda, o.depth);
  const auto offsets = offsets_up_to(o.depth);

  auto lookup = [](const Decomposition& dec, Offset off) -> std::int64_t {
    for (const auto& t : dec.terms) {
      if (t.offset == off) return t.multiplicity;
    }
    return 0;
  };

  json rows = json::array();
  std::ostringstream text;
  std::size_t mismatches = failure ? 1 : 0;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const Offset off = offsets[i];
    const std::int64_t c = lookup(closed, off);
    const std::optional<std::int64_t> pl = peeled ? std::optional(lookup(*peeled, off)) : std::nullopt;
    const std::optional<std::int64_t> h = hom[i];
    const bool agree = pl && *pl == c && (h ? *h == c : c == 0);
    if (!agree) ++mismatches;
    rows.push_back({{"offset", {off.p, off.q}},
                    {"closed_form", c},
                    {"peel", pl ? json(*pl) : json(nullptr)},
                    {"hom", h ? json(*h) : json(nullptr)},
                    {"agree", agree}});
    text << "offset (" << off.p << "," << off.q << ") closed=" << c << " peel=" << (pl ? std::to_string(*pl) : "-")
         << " hom=" << (h ? std::to_string(*h) : "n/a") << (agree ? " ok" : " MISMATCH") << "\n";
  }
  const bool pass = mismatches == 0;
  if (o.format == "text") {
    out << text.str();
    if (failure) out << "oracle failure: " << json_of(*failure).dump() << "\n";
    out << (pass ? "PASS" : "FAIL") << " " << case_name(in.id) << " lambda=" << in.lambda.to_string()
        << " depth=" << o.depth << " mismatches=" << mismatches << "\n";
  } else {
    out << json{{"case", std::string(case_name(in.id))},
                {"lambda", json_of(in.lambda)},
                {"depth", o.depth},
                {"pass", pass},
                {"mismatches", mismatches},
                {"oracle_failure", failure ? json_of(*failure) : json(nullptr)},
                {"offsets", rows}}
               .dump(2)
        << "\n";
  }
  return pass ? kExitOk : kExitMismatch;
}

int cmd_simple(const Options& o, std::ostream& out) {
  require_format(o, false);
  const PairId pair = parse_pair(o.pair);
  if (o.parabolic.empty()) throw UsageError("--parabolic is required");
  const ParabolicSpec p = parse_parabolic(o.parabolic, pair);
  std::optional<CaseId> id;
  if (is_compatible(p, pair) && !p.is_full()) id = case_for(pair, p);
  const Weight lambda = lambda_for(o, pair, id);

  const HypothesisSet* set = nullptr;
  if (!o.hypothesis.empty()) {
    set = &hypothesis_set(o.hypothesis);
  } else if (id) {
    set = &generic_hypothesis(*id);
  }
  std::optional<HypothesisResult> hyp;
  if (set) hyp = in_hypothesis(*set, lambda);
  const SimplicityVerdict verdict = jantzen_simple(p, lambda);

  if (o.format == "text") {
    if (set) {
      out << set->name << ": " << (hyp->holds ? "holds" : "fails") << " (failing: " << atoms_text(hyp->failing)
          << ")\n";
    }
    out << "jantzen " << p.label() << ": " << verdict_label(verdict) << " (failing: " << atoms_text(verdict.failing)
        << ")\n";
  } else {
    json j = {{"pair", std::string(pair_name(pair))}, {"parabolic", p.label()}, {"lambda", json_of(lambda)}};
    j["hypothesis"] = set ? json{{"name", set->name}, {"holds", hyp->holds}, {"failing_atoms", atoms_json(hyp->failing)}}
                          : json(nullptr);
    j["verdict"] = std::string(verdict_label(verdict));
    j["failing_atoms"] = atoms_json(verdict.failing);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  require_format(o, false);
  if (o.lambda.empty()) throw UsageError("--lambda u,v is required");
  const Weight delta = parse_weight(o.lambda, AlgebraId::G2);
  const auto images = dot_orbit(delta);
  std::vector<Weight> distinct;
  for (const auto& w : images) {
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);
  }
  const auto elements = WeylElementG2::all();
  if (o.format == "text") {
    for (std::size_t i = 0; i < images.size(); ++i) out << elements[i].name() << " . delta = " << images[i].to_string() << "\n";
    out << distinct.size() << " distinct\n";
    return kExitOk;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < images.size(); ++i) {
    rows.push_back({{"element", std::string(elements[i].name())}, {"image", json_of(images[i])}});
  }
  out << json{{"delta", json_of(delta)}, {"orbit", rows}, {"distinct", distinct.size()}}.dump(2) << "\n";
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o, bool with_case) {
  sub->add_option("--pair", o.pair, "Lie algebra pair")
      ->check(CLI::IsMember({"so7-g2", "g2-sl3"}))
      ->capture_default_str();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "text"}))
      ->capture_default_str();
  if (with_case) {
    sub->add_option("--parabolic", o.parabolic, "borel | p-e2-e3 | p-e1-e2-e3 | p-a1 | p-a2 | full | {root,...}");
    sub->add_option("--lambda", o.lambda, "Comma-separated rationals in the ambient basis");
    sub->add_option("--depth", o.depth, "Offset depth p+q bound")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--seed", o.seed, "Sample λ from the case's generic set when --lambda is absent");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching of generalized Verma modules for (so7, g2) and (g2, sl3)"};
  app.require_subcommand(1);
  Options o;

  auto* compat = app.add_subcommand("compat", "Compatible parabolics and hyperbolic witnesses");
  add_common(compat, o, false);
  compat->add_option("--parabolic", o.parabolic, "Single parabolic to test");

  auto* decompose = app.add_subcommand("decompose", "Closed-form branching decomposition");
  add_common(decompose, o, true);

  auto* verify = app.add_subcommand("verify", "Closed form vs character peel vs Hom-space count");
  add_common(verify, o, true);

  auto* simple = app.add_subcommand("simple", "Hypothesis membership and the Jantzen-type criterion");
  add_common(simple, o, true);
  simple->add_option("--hypothesis", o.hypothesis, "Named hypothesis set (default: the case's generic set)");

  auto* orbit = app.add_subcommand("orbit", "The twelve dot-action images of a g2 weight");
  add_common(orbit, o, false);
  orbit->add_option("--lambda", o.lambda, "u,v in simple-root coordinates");

  std::vector<std::string> argv_store = {"g2branch"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compat->parsed()) return cmd_compat(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (simple->parsed()) return cmd_simple(o, out);
    if (orbit->parsed()) return cmd_orbit(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace g2branch::cli
