#include "g2branch/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace g2branch {

namespace {

std::string_view basis_symbol(AlgebraId algebra) {
  switch (algebra) {
    case AlgebraId::So7: return "\\varepsilon";
    case AlgebraId::G2: return "\\alpha";
    case AlgebraId::Sl3: return "\\eta";
  }
  throw std::logic_error("unknown AlgebraId");
}

std::string_view algebra_latex(AlgebraId algebra) {
  switch (algebra) {
    case AlgebraId::So7: return "\\mathfrak{so}(7,\\mathbb{C})";
    case AlgebraId::G2: return "\\mathfrak{g}_2";
    case AlgebraId::Sl3: return "\\mathfrak{sl}(3,\\mathbb{C})";
  }
  throw std::logic_error("unknown AlgebraId");
}

// "e1-e2" -> "\varepsilon_1-\varepsilon_2", "3a1+2a2" -> "3\alpha_1+2\alpha_2".
std::string root_latex(std::string_view label) {
  std::string out;
  for (char ch : label) {
    if (ch == 'e') {
      out += "\\varepsilon_";
    } else if (ch == 'a') {
      out += "\\alpha_";
    } else if (ch == 'n') {
      out += "\\eta_";
    } else {
      out += ch;
    }
  }
  return out;
}

std::string offset_text(Offset o) { return "(" + std::to_string(o.p) + "," + std::to_string(o.q) + ")"; }

}  // namespace

json json_of(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"num/den\" string");
}

json json_of(const Weight& w) {
  json coords = json::array();
  for (const auto& c : w.coords()) coords.push_back(json_of(c));
  return {{"algebra", std::string(algebra_name(w.algebra()))}, {"coords", coords}};
}

Weight weight_from_json(const json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j.at("coords")) coords.push_back(rational_from_json(c));
  return Weight(parse_algebra(j.at("algebra").get<std::string>()), std::move(coords));
}

json json_of(const Decomposition& dec) {
  json terms = json::array();
  for (const auto& t : dec.terms) {
    terms.push_back({{"delta", json_of(t.delta)}, {"offset", {t.offset.p, t.offset.q}}, {"multiplicity", t.multiplicity}});
  }
  return {{"case", std::string(case_name(dec.case_id))},
          {"lambda", json_of(dec.lambda)},
          {"depth", dec.depth},
          {"terms", terms}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition dec{parse_case(j.at("case").get<std::string>()), weight_from_json(j.at("lambda")),
                    j.at("depth").get<int>(), {}};
  for (const auto& t : j.at("terms")) {
    const auto& o = t.at("offset");
    dec.terms.push_back({weight_from_json(t.at("delta")), Offset{o.at(0).get<int>(), o.at(1).get<int>()},
                         t.at("multiplicity").get<std::int64_t>()});
  }
  return dec;
}

json json_of(const OracleFailureReport& report) {
  return {{"case", std::string(case_name(report.case_id))},
          {"lambda", json_of(report.lambda)},
          {"offset", {report.offset.p, report.offset.q}},
          {"remainder_coefficient", report.remainder_coefficient},
          {"reason", report.reason}};
}

json json_of(const HyperbolicWitness& h) { return json::array({json_of(h.a), json_of(h.b)}); }

std::string latex_of(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  const std::string sign = r.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + r.abs().numerator_string() + "}{" + r.denominator_string() + "}";
}

std::string latex_of(const Weight& w) {
  std::string out;
  const auto symbol = basis_symbol(w.algebra());
  for (std::size_t i = 0; i < w.coords().size(); ++i) {
    const Rational& c = w[i];
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Rational a = c.abs();
    if (a != Rational(1)) out += latex_of(a);
    out += std::string(symbol) + "_{" + std::to_string(i + 1) + "}";
  }
  return out.empty() ? "0" : out;
}

std::string latex_of(const ParabolicSpec& p) {
  if (p.is_borel()) return "\\mathfrak{b}_{" + std::string(algebra_latex(p.algebra())) + "}";
  std::string out = "\\mathfrak{p}_{\\{";
  bool first = true;
  for (auto label : p.simple_labels()) {
    if (!first) out += ",";
    out += root_latex(label);
    first = false;
  }
  return out + "\\}}";
}

std::string latex_document(const Decomposition& dec, bool module_level) {
  const auto& c = branching_case(dec.case_id);
  const auto ambient = algebra_latex(ambient_algebra(c.pair));
  const auto sub = algebra_latex(sub_algebra(c.pair));
  std::ostringstream os;
  os << "\\documentclass{article}\n"
     << "\\usepackage{amsmath,amssymb}\n"
     << "\\begin{document}\n\n"
     << "% " << case_name(dec.case_id) << ", terms with offset depth at most " << dec.depth << "\n"
     << "$\\lambda = " << latex_of(dec.lambda) << "$.\n";
  if (module_level) {
    os << "Direct sum of simple $" << sub << "$-modules.\n";
  } else {
    os << "Identity in the Grothendieck group of $\\mathcal{O}^{" << latex_of(c.sub_parabolic) << "}$.\n";
  }
  os << "\\begin{align*}\n"
     << "\\operatorname{Res}^{" << ambient << "}_{" << sub << "} M^{" << ambient << "}_{"
     << latex_of(c.ambient_parabolic) << "}(\\lambda)\n";
  if (dec.terms.empty()) os << "  &= 0";
  for (std::size_t i = 0; i < dec.terms.size(); ++i) {
    const auto& t = dec.terms[i];
    os << (i == 0 ? "  &= " : " \\\\\n  &\\oplus ");
    if (t.multiplicity != 1) os << t.multiplicity << "\\,";
    os << "M^{" << sub << "}_{" << latex_of(c.sub_parabolic) << "}\\bigl(" << latex_of(t.delta) << "\\bigr)";
  }
  os << " \\\\\n  &\\oplus \\cdots\n"
     << "\\end{align*}\n\n"
     << "\\begin{tabular}{rrlr}\n"
     << "$p$ & $q$ & $\\delta$ & $m(\\delta;\\lambda)$ \\\\\n"
     << "\\hline\n";
  for (const auto& t : dec.terms) {
    os << t.offset.p << " & " << t.offset.q << " & $" << latex_of(t.delta) << "$ & " << t.multiplicity << " \\\\\n";
  }
  os << "\\end{tabular}\n\n"
     << "\\end{document}\n";
  return os.str();
}

std::string text_of(const Decomposition& dec) {
  std::ostringstream os;
  os << case_name(dec.case_id) << " lambda=" << dec.lambda.to_string() << " depth=" << dec.depth
     << " terms=" << dec.terms.size() << "\n";
  for (const auto& t : dec.terms) {
    os << "  offset " << offset_text(t.offset) << "  delta " << t.delta.to_string() << "  multiplicity "
       << t.multiplicity << "\n";
  }
  return os.str();
}

}  // namespace g2branch
