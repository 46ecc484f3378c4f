#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rankers/oracle.hpp"
#include "rankers/suites.hpp"
#include "rankers/syntax.hpp"

namespace rankers::cli {

using nlohmann::json;

/// Bad command-line input; maps to exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline LetterSet letters_of(const Ranker& r) {
  LetterSet s;
  for (const Step& st : r.steps()) s = s.with(st.letter);
  if (r.tail()) s = s.with(r.tail()->letter);
  return s;
}
inline LetterSet letters_of(const tl::Formula& f) {
  LetterSet s;
  tl::any_node(f, [&](const tl::Node& n) {
    if (n.op == tl::Op::mod) s = s.with(n.step.letter);
    if (n.op == tl::Op::atom) s = s.with(n.atom.letter);
    return false;
  });
  return s;
}
inline LetterSet letters_of(const itl::Formula& f) {
  LetterSet s;
  itl::any_node(f, [&](const itl::Node& n) {
    if (n.op == itl::Op::first || n.op == itl::Op::last) s = s.with(n.letter);
    if (n.op == itl::Op::atom) s = s.with(n.atom.letter);
    return false;
  });
  return s;
}
inline LetterSet letters_of(const Monomial& m) {
  LetterSet s = m.tail;
  for (const auto& b : m.blocks) s = (s | b.set).with(b.letter);
  return s;
}
inline void fo_letters(const fo::Formula& f, LetterSet& s) {
  const fo::Node& n = f.node();
  if (n.op == fo::Op::label || n.op == fo::Op::not_label) s = s.with(n.letter);
  if (n.lhs.operator->()) fo_letters(n.lhs, s);
  if (n.rhs.operator->()) fo_letters(n.rhs, s);
}
inline LetterSet letters_of(const fo::Formula& f) {
  LetterSet s;
  fo_letters(f, s);
  return s;
}
inline LetterSet letters_of(const Word& w) { return w.alphabet(); }

/// Offset of the first mention of letter c in the source text.
inline std::size_t letter_offset(std::string_view text, Letter c, bool raw) {
  if (raw) {
    auto i = text.find(c);
    return i == std::string_view::npos ? 0 : i;
  }
  for (const auto& t : syntax::lex(text)) {
    if (t.kind != syntax::Token::word) continue;
    if (auto m = syntax::decode(t.text); m && m->letter == c) return t.offset + t.text.size() - 1;
    if (t.text.size() == 1 && t.text[0] == c) return t.offset;
  }
  for (const auto& t : syntax::lex(text))
    if (t.kind == syntax::Token::word)
      if (auto i = t.text.find(c); i != std::string::npos) return t.offset + i;
  return 0;
}

template <class T>
void check_alphabet(const T& x, std::string_view text, std::optional<LetterSet> gamma, bool raw = false) {
  if (!gamma) return;
  LetterSet extra = letters_of(x) - *gamma;
  if (extra.empty()) return;
  const Letter c = extra.letters().front();
  throw parse_error(std::string("letter '") + c + "' is outside the alphabet " + gamma->to_string(),
                    letter_offset(text, c, raw));
}

/// A parsed acceptor together with the letters it mentions.
struct Parsed {
  Acceptor acceptor;
  LetterSet letters;
};

inline Parsed parse_acceptor(const std::string& kind, const std::string& text, std::optional<LetterSet> gamma) {
  if (kind == "tl") {
    auto f = tl::parse(text);
    check_alphabet(f, text, gamma);
    return {accept(f), letters_of(f)};
  }
  if (kind == "itl") {
    auto f = itl::parse(text);
    check_alphabet(f, text, gamma);
    return {accept(f), letters_of(f)};
  }
  if (kind == "ranker") {
    auto r = parse_ranker(text);
    check_alphabet(r, text, gamma);
    return {accept(r), letters_of(r)};
  }
  if (kind == "monomial") {
    auto m = parse_monomial(text);
    check_alphabet(m, text, gamma);
    return {accept(m), letters_of(m)};
  }
  if (kind == "fo") {
    auto f = fo::parse(text);
    check_alphabet(f, text, gamma);
    return {accept(f), letters_of(f)};
  }
  throw usage_error("unknown acceptor kind '" + kind + "' (expected tl, itl, ranker, monomial or fo)");
}

inline std::optional<LetterSet> alphabet_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!is_letter(s[i])) throw parse_error("alphabet letters must be a-z", i);
  return LetterSet::of(s);
}

inline std::string render(const std::vector<Ranker>& rs) {
  std::string out = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) out += (i ? ", " : "") + to_string(rs[i]);
  return out + "}";
}

struct Output {
  std::ostream& out;
  bool as_json;
  void emit(const json& j, const std::string& text) const {
    if (as_json)
      out << j.dump(2) << "\n";
    else
      out << text << "\n";
  }
};

}  // namespace detail

inline const std::vector<std::string>& transform_names() {
  static const std::vector<std::string> names{
      "lemma1", "lemma2", "lemma3", "prop1", "prop2", "lemma4", "lemma5", "lemma6", "lemma7",
      "lemma8", "lemma9", "thm5-negation", "thm5-ranker", "thm5-complement"};
  return names;
}

/// Runs the command line; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Rankers, unambiguous temporal logics and their fragments"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string word, ranker_s, tl_s, itl_s, mono_s, fo_s, alphabet_s;
  auto input_options = [&](CLI::App* c) {
    c->add_option("--ranker", ranker_s, "Ranker, e.g. \"Xa Yb Gn:c\"");
    c->add_option("--tl", tl_s, "TL formula, e.g. \"Xa(!Yb(T))\"");
    c->add_option("--itl", itl_s, "ITL formula, e.g. \"T Fa (Hn:b)\"");
    c->add_option("--monomial", mono_s, "Monomial, e.g. \"[b]* a . [ab]\"");
    c->add_option("--fo", fo_s, "FO sentence, e.g. \"E x. lab(x) = a\"");
    c->add_option("--alphabet", alphabet_s, "Alphabet letters, e.g. abc");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate on one word");
  eval->add_option("--word", word, "Word: abc, ab|ca (ab then (ca)^omega), _ (empty)")->required();
  input_options(eval);

  std::string tname, from_s, to_s;
  auto* transform = app.add_subcommand("transform", "Run one construction");
  transform->add_option("name", tname, "Construction name")->required()->check(CLI::IsMember(transform_names()));
  transform->add_option("--from", from_s, "Left interval boundary ranker (prop1/prop2)");
  transform->add_option("--to", to_s, "Right interval boundary ranker (prop1/prop2)");
  std::string set_s;
  transform->add_option("--set", set_s, "Letter set A (lemma4, thm5-complement)");
  input_options(transform);

  std::vector<std::string> fragment;
  bool positive = false;
  auto* classify_cmd = app.add_subcommand("classify", "Report syntactic fragment data");
  classify_cmd->add_option("--fragment", fragment, "Allowed modalities: X Y G H XL YL GL HL (F counts as X, L as Y)");
  classify_cmd->add_flag("--positive", positive, "Require a positive formula");
  input_options(classify_cmd);

  std::string left_s, right_s, left_kind = "tl", right_kind = "tl";
  std::optional<std::size_t> fmax, umax, vmax;
  auto* eq = app.add_subcommand("equiv", "Compare two acceptors on a bounded corpus");
  eq->add_option("--left", left_s)->required();
  eq->add_option("--right", right_s)->required();
  eq->add_option("--left-kind", left_kind, "tl, itl, ranker, monomial or fo")->capture_default_str();
  eq->add_option("--right-kind", right_kind, "tl, itl, ranker, monomial or fo")->capture_default_str();
  eq->add_option("--alphabet", alphabet_s, "Corpus alphabet (default: letters used, at least ab)");
  eq->add_option("--finite-max", fmax);
  eq->add_option("--u-max", umax);
  eq->add_option("--v-max", vmax);
  bool no_reencode = false;
  eq->add_flag("--no-reencode", no_reencode, "Skip the lasso re-encoding check");

  std::string suite_name;
  std::vector<std::string> suite_names;
  for (const auto& [n, f] : suites::registry()) suite_names.push_back(n);
  auto* suite = app.add_subcommand("suite", "Run a named test suite");
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names));
  std::size_t random_count = 500;
  suite->add_option("--random", random_count, "Random formulas for prop1/prop2")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  detail::Output o{out, as_json};
  std::string current;  // text being parsed, for error reports
  try {
    const auto gamma = detail::alphabet_option(alphabet_s);
    auto count_inputs = [&] {
      return int(!ranker_s.empty()) + int(!tl_s.empty()) + int(!itl_s.empty()) + int(!mono_s.empty()) +
             int(!fo_s.empty());
    };

    if (*eval) {
      if (count_inputs() != 1) throw usage_error("eval needs exactly one of --ranker --tl --itl --monomial --fo");
      current = word;
      Word w = parse_word(word);
      detail::check_alphabet(w, word, gamma, true);
      json j{{"word", w.to_string()}};
      if (!ranker_s.empty()) {
        current = ranker_s;
        Ranker r = parse_ranker(ranker_s);
        detail::check_alphabet(r, ranker_s, gamma);
        auto p = eval_outside(w, r);
        j["ranker"] = to_string(r);
        j["defined"] = p.has_value();
        j["position"] = p ? json(p->to_string()) : json(nullptr);
        o.emit(j, p ? "defined at position " + p->to_string() : "undefined");
        return 0;
      }
      std::string kind = !tl_s.empty() ? "tl" : !itl_s.empty() ? "itl" : !mono_s.empty() ? "monomial" : "fo";
      current = !tl_s.empty() ? tl_s : !itl_s.empty() ? itl_s : !mono_s.empty() ? mono_s : fo_s;
      auto p = detail::parse_acceptor(kind, current, gamma);
      if (p.acceptor.finite_only && !w.is_finite()) throw usage_error("FO sentences are evaluated on finite words only");
      const bool v = p.acceptor.accepts(w);
      j["kind"] = kind;
      j["input"] = current;
      j["value"] = v;
      o.emit(j, v ? "true" : "false");
      return 0;
    }

    if (*transform) {
      json j{{"transform", tname}};
      std::string text;
      auto need = [&](const std::string& s, const char* flag) -> const std::string& {
        if (s.empty()) throw usage_error("transform " + tname + " needs " + flag);
        current = s;
        return s;
      };
      auto gamma_for = [&](LetterSet used) { return gamma ? *gamma : used; };

      if (tname == "lemma1") {
        auto f = tl::parse(need(tl_s, "--tl"));
        detail::check_alphabet(f, tl_s, gamma);
        auto l = lemma1_tl_to_rankers(f);
        text = to_string(l);
        j["output"] = text;
      } else if (tname == "lemma2" || tname == "lemma3") {
        Ranker r = parse_ranker(need(ranker_s, "--ranker"));
        detail::check_alphabet(r, ranker_s, gamma);
        auto b = tname == "lemma2" ? lemma2_bounds(r) : lemma3_bounds(r);
        j["rho"] = tl::to_string(b.rho);
        j["theta"] = tl::to_string(b.theta);
        text = "rho:   " + tl::to_string(b.rho) + "\ntheta: " + tl::to_string(b.theta);
      } else if (tname == "prop1" || tname == "prop2") {
        auto f = itl::parse(need(itl_s, "--itl"));
        detail::check_alphabet(f, itl_s, gamma);
        Boundary q = Boundary::begin(), r = Boundary::end();
        if (!from_s.empty()) {
          current = from_s;
          q = Boundary::at(parse_ranker(from_s));
        }
        if (!to_s.empty()) {
          current = to_s;
          r = Boundary::at(parse_ranker(to_s));
        }
        current = itl_s;
        auto g = tname == "prop1" ? prop1_relativize(f, q, r) : prop2_relativize(f, q, r);
        text = tl::to_string(g);
        j["output"] = text;
      } else if (tname == "lemma4") {
        if (set_s.empty() && !gamma) throw usage_error("lemma4 needs --set and --alphabet");
        current = set_s;
        auto a = detail::alphabet_option(set_s).value_or(LetterSet());
        LetterSet g = gamma_for(a);
        if (!a.subset_of(g)) throw usage_error("--set is not inside --alphabet");
        j["alphabet"] = itl::to_string(lemma4_alphabet(a, g));
        j["imaginary"] = itl::to_string(lemma4_imaginary(a));
        text = "A^inf: " + j["alphabet"].get<std::string>() + "\nA in im: " + j["imaginary"].get<std::string>();
      } else if (tname == "lemma5" || tname == "lemma8" || tname == "lemma9") {
        Monomial m = parse_monomial(need(mono_s, "--monomial"));
        detail::check_alphabet(m, mono_s, gamma);
        LetterSet g = gamma_for(detail::letters_of(m));
        auto f = tname == "lemma5"   ? lemma5_monomial_to_itl(m, g)
                 : tname == "lemma8" ? lemma8_monomial_to_future_itl(m, g)
                                     : lemma9_complement_to_lazy_itl(m, g);
        text = itl::to_string(f);
        j["alphabet"] = g.to_string();
        j["output"] = text;
      } else if (tname == "lemma6") {
        Ranker r = parse_ranker(need(ranker_s, "--ranker"));
        detail::check_alphabet(r, ranker_s, gamma);
        j["mu"] = fo::to_string(lemma6_mu(r));
        j["sigma"] = fo::to_string(lemma6_sigma(r));
        j["sigma_variable"] = lemma6_sigma_variable(r);
        text = "mu(x):  " + j["mu"].get<std::string>() + "\nsigma(" + lemma6_sigma_variable(r) +
               "): " + j["sigma"].get<std::string>();
      } else if (tname == "lemma7") {
        Ranker r = parse_ranker(need(ranker_s, "--ranker"));
        detail::check_alphabet(r, ranker_s, gamma);
        auto rs = lemma7_xranker_complement(r);
        std::vector<std::string> names;
        for (const auto& s : rs) names.push_back(to_string(s));
        j["output"] = names;
        text = detail::render(rs);
      } else if (tname == "thm5-negation") {
        auto f = tl::parse(need(tl_s, "--tl"));
        detail::check_alphabet(f, tl_s, gamma);
        text = tl::to_string(thm5_negation_elimination(f));
        j["output"] = text;
      } else if (tname == "thm5-ranker") {
        Ranker r = parse_ranker(need(ranker_s, "--ranker"));
        detail::check_alphabet(r, ranker_s, gamma);
        text = tl::to_string(thm5_lazy_ranker_to_tl(r));
        j["output"] = text;
      } else {  // thm5-complement
        if (!gamma) throw usage_error("thm5-complement needs --alphabet");
        current = set_s;
        auto a = detail::alphabet_option(set_s).value_or(LetterSet());
        if (!a.subset_of(*gamma)) throw usage_error("--set is not inside --alphabet");
        text = itl::to_string(thm5_complement_Aim(a, *gamma));
        j["output"] = text;
      }
      o.emit(j, text);
      return 0;
    }

    if (*classify_cmd) {
      if (count_inputs() != 1 || !mono_s.empty() || !fo_s.empty())
        throw usage_error("classify needs exactly one of --ranker --tl --itl");
      ModalitySet allowed = ModalitySet::all();
      if (!fragment.empty()) {
        allowed = ModalitySet();
        for (const auto& name : fragment) {
          static const std::vector<std::pair<std::string, ModKind>> kinds{
              {"X", ModKind::next}, {"F", ModKind::next}, {"Y", ModKind::yesterday}, {"L", ModKind::yesterday},
              {"G", ModKind::globally_no}, {"H", ModKind::historically_no}};
          bool found = false;
          for (const auto& [k, mk] : kinds) {
            if (name == k) allowed = allowed | ModalitySet::of(mk, Flavor::eager), found = true;
            if (name == k + "L") allowed = allowed | ModalitySet::of(mk, Flavor::lazy), found = true;
          }
          if (!found) throw usage_error("unknown modality class '" + name + "'");
        }
      }
      json j;
      bool in = true;
      std::string text;
      if (!ranker_s.empty()) {
        current = ranker_s;
        Ranker r = parse_ranker(ranker_s);
        detail::check_alphabet(r, ranker_s, gamma);
        auto c = rankers::classify(r);
        const std::string rooting = c.rooting == Rooting::x_ranker ? "X-ranker" : "Y-ranker";
        const std::string flavor = c.flavor == Flavor::eager ? "eager" : "lazy";
        j = {{"ranker", to_string(r)}, {"rooting", rooting}, {"flavor", flavor}};
        text = rooting + ", " + flavor;
      } else if (!tl_s.empty()) {
        current = tl_s;
        auto f = tl::parse(tl_s);
        detail::check_alphabet(f, tl_s, gamma);
        in = tl::check_fragment(f, {allowed, positive, false});
        j = {{"formula", tl::to_string(f)},
             {"positive", !tl::has_negation(f)},
             {"future_rooted", tl::future_rooted(f)},
             {"size", tl::size(f)},
             {"in_fragment", in}};
        text = std::string(in ? "in fragment" : "not in fragment") + "; positive: " +
               (tl::has_negation(f) ? "no" : "yes") + "; X-rooted: " + (tl::future_rooted(f) ? "yes" : "no");
      } else {
        current = itl_s;
        auto f = itl::parse(itl_s);
        detail::check_alphabet(f, itl_s, gamma);
        in = itl::check_itl_fragment(f, allowed, positive);
        j = {{"formula", itl::to_string(f)},
             {"positive", !itl::has_negation(f)},
             {"future_formula", itl::is_future_formula(f)},
             {"size", itl::size(f)},
             {"in_fragment", in}};
        text = std::string(in ? "in fragment" : "not in fragment") + "; positive: " +
               (itl::has_negation(f) ? "no" : "yes") + "; future formula: " +
               (itl::is_future_formula(f) ? "yes" : "no");
      }
      o.emit(j, text);
      return in ? 0 : 1;
    }

    if (*eq) {
      current = left_s;
      auto l = detail::parse_acceptor(left_kind, left_s, gamma);
      current = right_s;
      auto r = detail::parse_acceptor(right_kind, right_s, gamma);
      LetterSet g = gamma ? *gamma : l.letters | r.letters | LetterSet::of("ab");
      Corpus std_c = standard_corpus(g);
      Corpus c = (fmax || umax || vmax)
                     ? build_corpus(g, fmax.value_or(std_c.finite_max), umax.value_or(std_c.lasso_u_max),
                                    vmax.value_or(std_c.lasso_v_max))
                     : std_c;
      auto res = equiv(l.acceptor, r.acceptor, c, !no_reencode);
      json j{{"alphabet", g.to_string()},
             {"corpus_size", c.words.size()},
             {"result", res ? "counterexample" : "pass"},
             {"counterexample", res ? res->to_json() : json(nullptr)}};
      o.emit(j, res ? res->to_text() : "Pass (" + std::to_string(c.words.size()) + " words)");
      return res ? 1 : 0;
    }

    if (*suite) {
      suites::Options opt;
      opt.random_count = random_count;
      auto rep = (*suites::find(suite_name))(opt);
      o.emit(rep.to_json(), rep.to_text());
      return rep.passed() ? 0 : 1;
    }
  } catch (const parse_error& e) {
    if (as_json)
      out << json{{"error", e.what()}, {"offset", e.offset()}, {"input", current}}.dump(2) << "\n";
    else
      err << "error: " << e.what() << "\n  " << current << "\n  "
          << std::string(e.offset(), ' ') << "^\n";
    return 2;
  } catch (const usage_error& e) {
    if (as_json)
      out << json{{"error", e.what()}}.dump(2) << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (as_json)
      out << json{{"error", e.what()}}.dump(2) << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rankers::cli
