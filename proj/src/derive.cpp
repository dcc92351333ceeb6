#include "jel/derive.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "jel/error.hpp"

namespace jel {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::A0: return "A0";
    case Rule::A2: return "A2";
    case Rule::A2e1: return "A2e1";
    case Rule::A2e2: return "A2e2";
    case Rule::A2e3: return "A2e3";
    case Rule::A3: return "A3";
    case Rule::A4: return "A4";
    case Rule::A4e: return "A4e";
    case Rule::A5: return "A5";
    case Rule::A5e: return "A5e";
  }
  return "?";
}

namespace {

bool is_explanatory_body(const Formula& body) {
  if (body.kind() == FormulaKind::Explained) return true;
  return body.kind() == FormulaKind::Not &&
         body.operand().kind() == FormulaKind::Explained;
}

// Justifying an explanation, or the absence of one, is never derivable.
bool violates_checker_discipline(const Formula& f) {
  return f.kind() == FormulaKind::Justified && is_explanatory_body(f.body());
}

Formula assertion(FormulaKind kind, Term t, Agent i, Formula body) {
  return kind == FormulaKind::Justified
             ? Formula::justified(std::move(t), std::move(i), std::move(body))
             : Formula::explained(std::move(t), std::move(i), std::move(body));
}

class Saturator {
 public:
  Saturator(const KnowledgeBase& kb, int depth, const SaturateOptions& opts)
      : kb_(kb), depth_(depth), opts_(opts) {}

  Closure run() {
    for (const Formula& f : kb_.assertions) admit(f);
    while (!queue_.empty()) {
      Formula f = queue_.front();
      queue_.pop_front();
      process(f);
    }
    Closure out;
    out.formulas.insert(seen_.begin(), seen_.end());
    for (auto& [f, steps] : producers_) {
      if (kb_members_.count(f)) continue;
      out.producers.emplace(f, std::move(steps));
    }
    out.truncated = truncated_;
    return out;
  }

 private:
  void admit(const Formula& f) {
    kb_members_.insert(f);
    if (seen_.insert(f).second) queue_.push_back(f);
  }

  void derive(Rule rule, std::vector<Formula> premises, Formula conclusion) {
    if (conclusion.term().height() > depth_) {
      truncated_ = true;
      return;
    }
    if (violates_checker_discipline(conclusion)) return;
    auto& steps = producers_[conclusion];
    DerivationStep step{rule, std::move(premises), conclusion};
    if (std::find(steps.begin(), steps.end(), step) == steps.end())
      steps.push_back(std::move(step));
    if (seen_.insert(conclusion).second) queue_.push_back(conclusion);
  }

  void combine(const Formula& major, const Formula& minor) {
    const bool mj = major.kind() == FormulaKind::Justified;
    const bool mn = minor.kind() == FormulaKind::Justified;
    Rule rule = mj && mn   ? Rule::A2
                : !mj && !mn ? Rule::A2e1
                : mj         ? Rule::A2e2
                             : Rule::A2e3;
    FormulaKind kind =
        mj && mn ? FormulaKind::Justified : FormulaKind::Explained;
    Formula concl = assertion(kind, Term::apply(major.term(), minor.term()),
                              minor.agent(), major.body().right());
    derive(rule, {major, minor}, concl);
  }

  void process(const Formula& f) {
    if (f.is_assertion()) {
      const Formula& body = f.body();
      if (body.kind() == FormulaKind::Implies) {
        majors_[body.left()].push_back(f);
        auto it = minors_.find(body.left());
        if (it != minors_.end()) {
          auto minors = it->second;  // combine() may grow the index
          for (const Formula& m : minors) combine(f, m);
        }
      }
      minors_[body].push_back(f);
      auto it = majors_.find(body);
      if (it != majors_.end()) {
        auto majors = it->second;
        for (const Formula& m : majors)
          if (m != f) combine(m, f);
      }

      if (f.kind() == FormulaKind::Justified) {
        for (const Term& t : kb_.term_universe) {
          derive(Rule::A3, {f},
                 Formula::justified(Term::sum(f.term(), t), f.agent(), body));
          derive(Rule::A3, {f},
                 Formula::justified(Term::sum(t, f.term()), f.agent(), body));
        }
        derive(Rule::A4, {f},
               Formula::justified(Term::bang(f.term()), f.agent(), f));
        if (opts_.explain_checkers)
          derive(Rule::A4, {f},
                 Formula::explained(Term::bang(f.term()), f.agent(), f));
      } else {
        derive(Rule::A4e, {f},
               Formula::explained(Term::bang(f.term()), f.agent(), f));
      }
      return;
    }
    if (f.kind() == FormulaKind::Not && f.operand().is_assertion()) {
      const Formula& inner = f.operand();
      Term q = Term::query(inner.term());
      if (inner.kind() == FormulaKind::Justified) {
        derive(Rule::A5, {f}, Formula::justified(q, inner.agent(), f));
        if (opts_.explain_checkers)
          derive(Rule::A5, {f}, Formula::explained(q, inner.agent(), f));
      } else {
        derive(Rule::A5e, {f}, Formula::explained(q, inner.agent(), f));
      }
    }
  }

  const KnowledgeBase& kb_;
  int depth_;
  SaturateOptions opts_;
  bool truncated_ = false;
  std::deque<Formula> queue_;
  std::unordered_set<Formula> seen_;
  std::unordered_set<Formula> kb_members_;
  std::unordered_map<Formula, std::vector<DerivationStep>> producers_;
  // Assertions indexed by body, and implication carriers by antecedent.
  std::unordered_map<Formula, std::vector<Formula>> minors_;
  std::unordered_map<Formula, std::vector<Formula>> majors_;
};

std::string premise_key(const DerivationStep& s) {
  std::string key;
  for (const Formula& p : s.premises) key += print_formula(p) + "\n";
  return key;
}

}  // namespace

Closure saturate_closure(const KnowledgeBase& kb, int depth,
                         const SaturateOptions& opts) {
  return Saturator(kb, depth, opts).run();
}

std::set<Formula> saturate(const KnowledgeBase& kb, int depth) {
  return saturate_closure(kb, depth).formulas;
}

std::optional<Derivation> prove(const Closure& closure,
                                const KnowledgeBase& kb, const Formula& goal,
                                int depth) {
  if (!closure.contains(goal)) return std::nullopt;
  std::set<Formula> leaves(kb.assertions.begin(), kb.assertions.end());
  Derivation d{{}, goal, depth};
  std::set<Formula> done;
  // Every premise has a strictly shorter term than its conclusion, so the
  // recursion bottoms out.
  std::function<void(const Formula&)> emit = [&](const Formula& f) {
    if (leaves.count(f) || done.count(f)) return;
    const auto& steps = closure.producers.at(f);
    const DerivationStep* best = &steps.front();
    for (const DerivationStep& s : steps) {
      if (s.rule < best->rule ||
          (s.rule == best->rule && premise_key(s) < premise_key(*best)))
        best = &s;
    }
    for (const Formula& p : best->premises) emit(p);
    done.insert(f);
    d.steps.push_back(*best);
  };
  emit(goal);
  return d;
}

std::optional<Derivation> prove(const KnowledgeBase& kb, const Formula& goal,
                                int depth) {
  return prove(saturate_closure(kb, depth), kb, goal, depth);
}

// ---------------------------------------------------------------------------

namespace {

void collect_atoms(const Formula& f, std::vector<Formula>& atoms) {
  switch (f.kind()) {
    case FormulaKind::Top: return;
    case FormulaKind::Not: collect_atoms(f.operand(), atoms); return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_atoms(f.left(), atoms);
      collect_atoms(f.right(), atoms);
      return;
    default:
      if (std::find(atoms.begin(), atoms.end(), f) == atoms.end())
        atoms.push_back(f);
  }
}

bool evaluate(const Formula& f, const std::vector<Formula>& atoms,
              unsigned long mask) {
  switch (f.kind()) {
    case FormulaKind::Top: return true;
    case FormulaKind::Not: return !evaluate(f.operand(), atoms, mask);
    case FormulaKind::And:
      return evaluate(f.left(), atoms, mask) && evaluate(f.right(), atoms, mask);
    case FormulaKind::Or:
      return evaluate(f.left(), atoms, mask) || evaluate(f.right(), atoms, mask);
    case FormulaKind::Implies:
      return !evaluate(f.left(), atoms, mask) ||
             evaluate(f.right(), atoms, mask);
    default: {
      auto pos = std::find(atoms.begin(), atoms.end(), f) - atoms.begin();
      return (mask >> pos) & 1u;
    }
  }
}

}  // namespace

bool check_tautology(const Formula& f) {
  std::vector<Formula> atoms;
  collect_atoms(f, atoms);
  if (atoms.size() > 16)
    throw Error(ErrorCode::TooManyAtoms,
                std::to_string(atoms.size()) + " atoms, limit is 16");
  const unsigned long rows = 1ul << atoms.size();
  for (unsigned long mask = 0; mask < rows; ++mask)
    if (!evaluate(f, atoms, mask)) return false;
  return true;
}

std::vector<Formula> validate_necessity(const KnowledgeBase& kb) {
  std::set<Formula> supported;
  for (const Formula& f : kb.assertions)
    if (f.is_assertion()) supported.insert(f.body());
  std::vector<Formula> out;
  for (const Formula& f : kb.assertions) {
    if (f.is_assertion()) continue;
    if (f.kind() == FormulaKind::Not && f.operand().is_assertion()) continue;
    if (!supported.count(f)) out.push_back(f);
  }
  return out;
}

}  // namespace jel
