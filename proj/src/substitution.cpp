#include "distred/substitution.hpp"

#include <chrono>
#include <deque>
#include <map>

#include "distred/errors.hpp"

namespace distred {

Mask shared_symbols(const Distribution& d) {
  Mask out = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      out |= d.parts()[i] & d.parts()[j];
  return out;
}

bool substitutable(const Distribution& left, const Distribution& right,
                   std::size_t i) {
  require_same_alphabet(left, right);
  Mask a = shared_symbols(left);
  return (a & right.parts()[i]) == a;
}

Distribution substitute(const Distribution& left, const Distribution& right,
                        std::size_t i) {
  if (!substitutable(left, right, i))
    throw Error(ErrorCode::NotSubstitutable,
                left.to_string() + " is not substitutable into part " +
                    std::to_string(i) + " of " + right.to_string());
  std::vector<Mask> parts;
  Mask target = right.parts()[i];
  for (std::size_t j = 0; j < right.size(); ++j)
    if (j != i) parts.push_back(right.parts()[j]);
  for (Mask p : left.parts())
    if (Mask m = p & target) parts.push_back(m);
  return Distribution(right.alphabet(), keep_maximal_masks(std::move(parts)));
}

bool replay(const ProofTrace& t) {
  std::vector<Distribution> known = t.premises;
  auto is_known = [&](const Distribution& d) {
    for (const auto& k : known)
      if (k == d) return true;
    return false;
  };
  for (const auto& s : t.steps) {
    if (!is_known(s.left) || !is_known(s.right)) return false;
    if (s.position >= s.right.size()) return false;
    try {
      if (substitute(s.left, s.right, s.position) != s.result) return false;
    } catch (const Error&) {
      return false;
    }
    known.push_back(s.result);
  }
  return is_known(t.conclusion) &&
         (t.steps.empty() || t.steps.back().result == t.conclusion);
}

namespace {

struct Derivation {
  // Generating step by pool index; -1 for premises.
  int left = -1;
  int right = -1;
  std::size_t position = 0;
};

ProofTrace reconstruct(const std::vector<Distribution>& pool,
                       const std::vector<Derivation>& how,
                       std::size_t n_premises, int goal_id) {
  ProofTrace t{{pool.begin(), pool.begin() + n_premises},
               {},
               pool[goal_id]};
  // Ancestors in id order replay correctly since every operand id is
  // smaller than the result id.
  std::vector<bool> needed(pool.size(), false);
  std::deque<int> stack{goal_id};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (id < static_cast<int>(n_premises) || needed[id]) continue;
    needed[id] = true;
    stack.push_back(how[id].left);
    stack.push_back(how[id].right);
  }
  for (std::size_t id = n_premises; id < pool.size(); ++id)
    if (needed[id])
      t.steps.push_back({pool[how[id].left], pool[how[id].right],
                         how[id].position, pool[id]});
  return t;
}

}  // namespace

SaturationResult saturate(const std::vector<Distribution>& premises,
                          const Distribution& goal, std::size_t budget,
                          std::size_t time_cap_ms) {
  for (const auto& p : premises) require_same_alphabet(p, goal);

  std::vector<Distribution> pool;
  std::map<Distribution, int> index;
  std::vector<Derivation> how;
  for (const auto& p : premises) {
    if (index.count(p)) continue;
    index.emplace(p, static_cast<int>(pool.size()));
    pool.push_back(p);
    how.push_back({});
  }
  std::size_t n_premises = pool.size();
  auto it = index.find(goal);
  if (it != index.end())
    return {SaturationStatus::Derived,
            reconstruct(pool, how, n_premises, it->second), 0};

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(time_cap_ms);
  std::deque<int> queue;
  for (std::size_t i = 0; i < pool.size(); ++i)
    queue.push_back(static_cast<int>(i));

  // Insert a derived distribution; returns the goal's trace when it appears.
  std::optional<ProofTrace> found;
  auto add = [&](int l, int r, std::size_t pos,
                 Distribution&& d) -> bool /* budget ok */ {
    if (index.count(d)) return true;
    if (pool.size() - n_premises >= budget) return false;
    int id = static_cast<int>(pool.size());
    index.emplace(d, id);
    pool.push_back(std::move(d));
    how.push_back({l, r, pos});
    queue.push_back(id);
    if (pool[id] == goal) found = reconstruct(pool, how, n_premises, id);
    return true;
  };

  while (!queue.empty() && !found) {
    if (time_cap_ms &&
        std::chrono::steady_clock::now() > deadline)
      return {SaturationStatus::Budget, std::nullopt, pool.size() - n_premises};
    int x = queue.front();
    queue.pop_front();
    int known = static_cast<int>(pool.size());
    for (int p = 0; p < known && !found; ++p) {
      // x paired with every element derived before it, both ways.
      for (int dir = 0; dir < 2 && !found; ++dir) {
        int l = dir == 0 ? p : x;
        int r = dir == 0 ? x : p;
        if (dir == 1 && p == x) continue;
        for (std::size_t pos = 0; pos < pool[r].size() && !found; ++pos) {
          if (!substitutable(pool[l], pool[r], pos)) continue;
          Distribution d = substitute(pool[l], pool[r], pos);
          if (!add(l, r, pos, std::move(d)))
            return {SaturationStatus::Budget, std::nullopt,
                    pool.size() - n_premises};
        }
      }
    }
  }
  if (found)
    return {SaturationStatus::Derived, std::move(found),
            pool.size() - n_premises};
  return {SaturationStatus::Fixpoint, std::nullopt, pool.size() - n_premises};
}

ValidationResult strengthened_validate(const CandidateReduction& p,
                                       std::size_t budget,
                                       std::size_t size_cap,
                                       std::size_t time_cap_ms) {
  ValidationResult out;
  SaturationResult plain =
      saturate(p.members(), p.source(), budget, time_cap_ms);
  if (plain.status == SaturationStatus::Derived) {
    out.trace = std::move(plain.trace);
    return out;
  }
  out.budget_hit = plain.status == SaturationStatus::Budget;
  SaturationResult strong =
      saturate(upward_set(p, size_cap), p.source(), budget, time_cap_ms);
  if (strong.status == SaturationStatus::Derived) {
    out.trace = std::move(strong.trace);
    out.strengthened = true;
    return out;
  }
  out.budget_hit |= strong.status == SaturationStatus::Budget;
  return out;
}

}  // namespace distred
