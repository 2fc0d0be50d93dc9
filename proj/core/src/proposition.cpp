#include "iru/proposition.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "iru/error.hpp"

namespace iru {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_syntax(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::kBadPropositionSyntax,
              std::string(why) + " in '" + std::string(text) + "'");
}

std::vector<std::string_view> split_on(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

}  // namespace

Proposition::Proposition(Rule r) {
  if (r.antecedents.empty()) {
    throw Error(ErrorKind::kBadPropositionSyntax, "rule with no antecedents");
  }
  std::set<Literal> seen;
  for (const auto& a : r.antecedents) {
    if (!seen.insert(a).second) {
      throw Error(ErrorKind::kBadPropositionSyntax, "duplicate antecedent '" + to_string(a) + "'");
    }
  }
  form_ = std::move(r);
}

std::vector<std::string> Proposition::atoms() const {
  std::set<std::string> out;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Literal>) {
          out.insert(f.atom);
        } else if constexpr (std::is_same_v<T, Rule>) {
          for (const auto& a : f.antecedents) out.insert(a.atom);
          out.insert(f.consequent.atom);
        } else {
          out.insert(f.left.atom);
          out.insert(f.right.atom);
        }
      },
      form_);
  return {out.begin(), out.end()};
}

std::vector<Rule> expand_rules(const Proposition& p) {
  std::vector<Rule> rules;
  if (const auto* r = std::get_if<Rule>(&p.form())) {
    rules.push_back(*r);
    if (r->antecedents.size() == 1) {
      rules.push_back(Rule{{r->consequent.negated()}, r->antecedents.front().negated()});
    }
  } else if (const auto* b = std::get_if<Biconditional>(&p.form())) {
    rules.push_back(Rule{{b->left}, b->right});
    rules.push_back(Rule{{b->right}, b->left});
    rules.push_back(Rule{{b->right.negated()}, b->left.negated()});
    rules.push_back(Rule{{b->left.negated()}, b->right.negated()});
  }
  return rules;
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Literal parse_literal(std::string_view text) {
  auto s = trim(text);
  bool positive = true;
  if (!s.empty() && s.front() == '!') {
    positive = false;
    s = trim(s.substr(1));
  }
  if (!is_identifier(s)) bad_syntax(text, "expected literal");
  return Literal{std::string(s), positive};
}

Proposition parse_proposition(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) bad_syntax(text, "empty proposition");

  if (auto pos = s.find("<->"); pos != std::string_view::npos) {
    auto sides = split_on(s, "<->");
    if (sides.size() != 2) bad_syntax(text, "chained biconditional");
    return Biconditional{parse_literal(sides[0]), parse_literal(sides[1])};
  }
  if (auto pos = s.find("->"); pos != std::string_view::npos) {
    auto sides = split_on(s, "->");
    if (sides.size() != 2) bad_syntax(text, "chained implication");
    Rule rule;
    for (auto part : split_on(sides[0], "&")) rule.antecedents.push_back(parse_literal(part));
    rule.consequent = parse_literal(sides[1]);
    return Proposition(std::move(rule));
  }
  if (s.find('&') != std::string_view::npos) bad_syntax(text, "conjunction outside a rule");
  return parse_literal(s);
}

std::string to_string(const Literal& l) { return (l.positive ? "" : "!") + l.atom; }

std::string to_string(const Proposition& p) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return to_string(f);
        } else if constexpr (std::is_same_v<T, Rule>) {
          std::string out;
          for (std::size_t i = 0; i < f.antecedents.size(); ++i) {
            if (i > 0) out += " & ";
            out += to_string(f.antecedents[i]);
          }
          return out + " -> " + to_string(f.consequent);
        } else {
          return to_string(f.left) + " <-> " + to_string(f.right);
        }
      },
      p.form());
}

}  // namespace iru
