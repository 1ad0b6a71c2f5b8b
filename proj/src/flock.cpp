#include "stringnet/flock.hpp"

namespace stringnet {

FlockGraph build_flock_graph(std::span<const AgentState> attackers,
                             const FlockParams& params) {
  const int n = static_cast<int>(attackers.size());
  FlockGraph graph;
  graph.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(attackers[i].pos, attackers[j].pos) <= params.neighbor_radius) {
        graph.adjacency[i].push_back(j);
        graph.adjacency[j].push_back(i);
      }
    }
  }
  return graph;
}

Vec2 flock_accel(int i, std::span<const AgentState> attackers, const FlockGraph& graph,
                 std::span<const Obstacle> obstacles, const FlockParams& params,
                 Vec2 protected_center) {
  const AgentState& self = attackers[i];
  Vec2 u = params.nav_gain * (protected_center - self.pos);
  for (int j : graph.adjacency[i]) {
    u += pairwise_accel(params.attacker_pot,
                        {self.pos, self.vel, attackers[j].pos, attackers[j].vel});
  }
  for (const Obstacle& ob : obstacles) {
    const double sigma = blend(params.obstacle_blend, superelliptic_distance(ob, self.pos));
    if (sigma > 0.0) {
      const VirtualAgent beta = project_onto_contour(ob, self.pos, self.vel);
      u += sigma * pairwise_accel(params.obstacle_pot,
                                  {self.pos, self.vel, beta.pos, beta.vel});
    }
  }
  return u;
}

Vec2 defender_avoid_accel(int i, std::span<const AgentState> attackers,
                          std::span<const AgentState> defenders,
                          const FlockParams& params) {
  const AgentState& self = attackers[i];
  Vec2 u{};
  for (const AgentState& d : defenders) {
    const double dist = distance(self.pos, d.pos);
    if (dist >= params.sense_radius) {
      continue;
    }
    const double sigma = blend(params.defender_blend, dist);
    if (sigma > 0.0) {
      u += sigma * pairwise_accel(params.defender_pot, {self.pos, self.vel, d.pos, d.vel});
    }
  }
  return u;
}

Vec2 string_avoid_accel(int i, std::span<const AgentState> attackers,
                        std::span<const AgentState> defenders,
                        std::span<const std::pair<int, int>> strings,
                        const FlockParams& params) {
  const AgentState& self = attackers[i];
  Vec2 u{};
  for (const auto& [ja, jb] : strings) {
    const StringSegment seg{defenders[ja], defenders[jb]};
    const VirtualAgent proj = project_onto_string(seg, self.pos);
    const double dist = distance(self.pos, proj.pos);
    if (dist >= params.sense_radius) {
      continue;
    }
    const double sigma = blend(params.string_blend, dist);
    if (sigma > 0.0) {
      u += sigma *
           pairwise_accel(params.string_pot, {self.pos, self.vel, proj.pos, proj.vel});
    }
  }
  return u;
}

Vec2 attacker_control(int i, const AttackerWorldView& world, const FlockParams& params,
                      double drag) {
  const Vec2 u = flock_accel(i, world.attackers, *world.graph, world.obstacles, params,
                             world.protected_center) +
                 defender_avoid_accel(i, world.attackers, world.defenders, params) +
                 string_avoid_accel(i, world.attackers, world.defenders, world.strings,
                                    params) +
                 drag * world.attackers[i].vel;
  return saturate(u, params.accel_limit);
}

}  // namespace stringnet
