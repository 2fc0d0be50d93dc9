#pragma once

// A small propositional language: literals, conjunctive-antecedent rules,
// and literal biconditionals.
//
// Surface syntax (whitespace-insensitive):
//   atom    !atom    a & !b -> c    a <-> !b
// Identifiers match [A-Za-z][A-Za-z0-9_]*.

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace iru {

struct Literal {
  std::string atom;
  bool positive = true;

  Literal negated() const { return {atom, !positive}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Rule {
  std::vector<Literal> antecedents;  // nonempty, no duplicates
  Literal consequent;

  friend auto operator<=>(const Rule&, const Rule&) = default;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Biconditional {
  Literal left;
  Literal right;

  friend auto operator<=>(const Biconditional&, const Biconditional&) = default;
  friend bool operator==(const Biconditional&, const Biconditional&) = default;
};

class Proposition {
 public:
  using Form = std::variant<Literal, Rule, Biconditional>;

  Proposition(Literal l) : form_(std::move(l)) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error(kBadPropositionSyntax) on an empty or duplicated antecedent list.
  Proposition(Rule r);  // NOLINT(google-explicit-constructor)
  Proposition(Biconditional b) : form_(std::move(b)) {}  // NOLINT(google-explicit-constructor)

  const Form& form() const noexcept { return form_; }
  bool is_literal() const noexcept { return std::holds_alternative<Literal>(form_); }
  const Literal* as_literal() const noexcept { return std::get_if<Literal>(&form_); }

  /// Atoms mentioned, sorted and unique.
  std::vector<std::string> atoms() const;

  friend auto operator<=>(const Proposition&, const Proposition&) = default;
  friend bool operator==(const Proposition&, const Proposition&) = default;

 private:
  Form form_;
};

/// Directional rules equivalent to `p` for forward chaining. Literals yield
/// nothing; a Biconditional yields both directions plus contrapositives; a
/// single-antecedent Rule yields itself plus its contrapositive.
std::vector<Rule> expand_rules(const Proposition& p);

/// Truth of `p` under a valuation over its atoms.
template <class Valuation>
bool evaluate(const Proposition& p, const Valuation& value_of);

bool is_identifier(std::string_view s) noexcept;

/// Throws Error(kBadPropositionSyntax).
Proposition parse_proposition(std::string_view text);
Literal parse_literal(std::string_view text);

std::string to_string(const Literal& l);
/// Canonical rendering: "!a", "a & b -> c", "a <-> !b".
std::string to_string(const Proposition& p);

// --- implementation ---

template <class Valuation>
bool evaluate(const Proposition& p, const Valuation& value_of) {
  auto lit = [&](const Literal& l) { return value_of(l.atom) == l.positive; };
  return std::visit(
      [&](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return lit(f);
        } else if constexpr (std::is_same_v<T, Rule>) {
          for (const auto& a : f.antecedents) {
            if (!lit(a)) return true;
          }
          return lit(f.consequent);
        } else {
          return lit(f.left) == lit(f.right);
        }
      },
      p.form());
}

}  // namespace iru
