#include "cck/oracle.hpp"

#include <deque>
#include <map>
#include <set>

#include "cck/error.hpp"

namespace cck {

namespace {

std::size_t crossing_number(const Triangulation& t, const Chord& gamma) { return geometric_crossings(t, gamma).size(); }

std::vector<Chord> state_key(const Triangulation& t) {
  std::vector<Chord> key;
  for (int e = 1; e <= static_cast<int>(t.n()); ++e) key.push_back(t.lift(e));
  return key;
}

// Shortest flip sequence from t to a triangulation crossing gamma fewer than
// d times, exploring at most `budget` triangulations.
std::optional<std::vector<int>> search(const Triangulation& t, const Chord& gamma, std::size_t d, std::size_t budget,
                                       std::size_t& visited) {
  struct Node {
    Triangulation t;
    std::vector<int> flips;
  };
  std::deque<Node> queue{{t, {}}};
  std::set<std::vector<Chord>> seen{state_key(t)};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (int e = 1; e <= static_cast<int>(node.t.n()); ++e) {
      Triangulation next = flip(node.t, e);
      if (!seen.insert(state_key(next)).second) continue;
      if (++visited > budget) return std::nullopt;
      std::vector<int> flips = node.flips;
      flips.push_back(e);
      if (crossing_number(next, gamma) < d) return flips;
      queue.push_back({std::move(next), std::move(flips)});
    }
  }
  return std::nullopt;
}

}  // namespace

OracleResult oracle_expand(const Triangulation& t, const Arc& gamma, const OracleOptions& options) {
  if (!t.cover()) throw DomainError("the mutation oracle needs a polygon or annulus surface");
  const Chord target = arc_chord(t, gamma);
  if (!t.cover()->is_arc(target)) throw DomainError("'" + to_string(gamma) + "' is not an arc");

  const ExtendedMatrix bt = build_BT(t);
  ExtendedMatrix start = bt;
  if (options.matrix) {
    start = *options.matrix;
    if (start.n() != bt.n()) throw DomainError("coefficient matrix has the wrong rank");
    for (std::size_t i = 1; i <= bt.n(); ++i)
      for (std::size_t j = 1; j <= bt.n(); ++j)
        if (start(i, j) != bt(i, j)) throw DomainError("coefficient matrix does not extend B_T");
  }

  OracleResult result;
  Seed seed = Seed::initial(start);
  Triangulation current = t;
  auto apply = [&](int e) {
    seed = mutate_seed(seed, static_cast<std::size_t>(e));
    current = flip(current, e);
    result.flip_sequence.push_back(e);
    ++result.seeds_visited;
  };

  while (true) {
    const auto crossings = geometric_crossings(current, target);
    const std::size_t d = crossings.size();
    if (d == 0) {
      const auto e = current.edge_of(target);
      if (!e) throw InvariantError("uncrossed arc is missing from the triangulation");
      result.value = seed.cluster_values[static_cast<std::size_t>(*e - 1)];
      return result;
    }
    bool progressed = false;
    std::set<int> tried;
    for (auto it = crossings.rbegin(); it != crossings.rend() && !progressed; ++it) {
      if (!tried.insert(it->edge).second) continue;
      if (crossing_number(flip(current, it->edge), target) < d) {
        apply(it->edge);
        progressed = true;
      }
    }
    if (progressed) continue;
    result.used_search = true;
    const std::size_t budget = options.budget ? options.budget : 10 * d;
    auto flips = search(current, target, d, budget, result.seeds_visited);
    if (!flips)
      throw DomainError("no flip sequence lowering the crossing number below " + std::to_string(d) + " within " +
                        std::to_string(budget) + " triangulations");
    for (int e : *flips) apply(e);
  }
}

}  // namespace cck
