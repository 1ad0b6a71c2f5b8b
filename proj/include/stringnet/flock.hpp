#pragma once

#include <span>
#include <utility>
#include <vector>

#include "stringnet/potentials.hpp"
#include "stringnet/virtual_agents.hpp"

namespace stringnet {

struct FlockParams {
  double nav_gain = 0.25;        // pull toward the protected center
  double accel_limit = 2.0;      // hard bound on every attacker control
  double sense_radius = 6.0;     // attacker sensing range
  double neighbor_radius = 4.0;  // flock graph edge length
  BlendSpec obstacle_blend{0.9, 20.0};  // argument is the superelliptic distance
  BlendSpec defender_blend{1.4, 2.5};
  BlendSpec string_blend{0.8, 2.5};
  PotentialSpec attacker_pot;
  PotentialSpec defender_pot;
  PotentialSpec string_pot;
  PotentialSpec obstacle_pot;
};

struct FlockGraph {
  std::vector<std::vector<int>> adjacency;  // symmetric, irreflexive
};

FlockGraph build_flock_graph(std::span<const AgentState> attackers,
                             const FlockParams& params);

/// Read-only snapshot handed to every attacker control evaluation.
struct AttackerWorldView {
  std::span<const AgentState> attackers;
  std::span<const AgentState> defenders;
  std::span<const std::pair<int, int>> strings;  // established defender edges
  std::span<const Obstacle> obstacles;
  const FlockGraph* graph = nullptr;
  Vec2 protected_center;
};

/// Navigation + cohesion + obstacle avoidance through contour projections.
Vec2 flock_accel(int i, std::span<const AgentState> attackers, const FlockGraph& graph,
                 std::span<const Obstacle> obstacles, const FlockParams& params,
                 Vec2 protected_center);

Vec2 defender_avoid_accel(int i, std::span<const AgentState> attackers,
                          std::span<const AgentState> defenders,
                          const FlockParams& params);

Vec2 string_avoid_accel(int i, std::span<const AgentState> attackers,
                        std::span<const AgentState> defenders,
                        std::span<const std::pair<int, int>> strings,
                        const FlockParams& params);

/// Combined bounded control: all terms plus drag cancellation, saturated.
Vec2 attacker_control(int i, const AttackerWorldView& world, const FlockParams& params,
                      double drag);

}  // namespace stringnet
