#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stringnet/potentials.hpp"
#include "stringnet/virtual_agents.hpp"

namespace stringnet {

struct HerdingParams {
  double k1 = 16.0;  // position feedback gain
  double k2 = 8.0;   // velocity feedback gain
  double alpha2 = 0.8;  // gathering velocity exponent; alpha1 is derived
  double gather_radius = 16.0;       // distance of the gather arc center from P
  double arc_radius = 5.0;           // radius of the open semicircle
  double net_radius = 4.5;           // radius of the closed net formation
  double net_radius_max = 5.5;       // largest footprint that fits the free space
  double connectivity_radius = 2.5;  // radius of the flock region around its center
  double formation_tol = 0.35;       // slot tolerance that latches phase changes
  double wait_trigger_dist = 7.5;    // flock distance that ends the waiting phase
  double done_dist = 1.0;            // formation-to-safe-center distance at Done
  double done_speed = 0.2;           // formation speed threshold at Done
  double herd_accel_limit = 1.0;     // bound on the virtual agent's acceleration
  double approach_budget = 12.0;     // worst-case flock travel while the net forms
  double form_time_estimate = 6.0;   // scenario estimate used for approach_budget
  BlendSpec defender_blend{0.9, 2.0};
  BlendSpec connectivity_blend{0.5, 2.0};
  BlendSpec obstacle_blend{0.9, 30.0};            // defender vs obstacle, superelliptic
  BlendSpec formation_obstacle_blend{200.0, 1200.0};  // virtual agent vs obstacle
  PotentialSpec defender_pot;
  PotentialSpec obstacle_pot;
  PotentialSpec connectivity_pot;
  PotentialSpec formation_obstacle_pot;

  double alpha1() const { return alpha2 / (2.0 - alpha2); }
};

enum class Phase { Gathering, Waiting, FormingStringNet, Herding, Done };

const char* phase_name(Phase phase);

/// Mission state owned by the simulation loop. String edges only ever grow and
/// the phase only ever advances.
struct MissionState {
  Phase phase = Phase::Gathering;
  bool started = false;
  double approach_angle = 0.0;  // frozen bearing from the protected center to the flock
  double base_angle = 0.0;      // approach_angle - pi/2, anchors every slot angle
  std::vector<std::pair<int, int>> strings;
  AgentState formation;  // virtual formation agent, meaningful from Herding on
};

bool has_string(const MissionState& mission, int a, int b);

struct DesiredState {
  Vec2 pos;
  Vec2 vel;
  Vec2 acc;
};

std::pair<Vec2, Vec2> center_of_mass(std::span<const AgentState> agents);

/// Stationary slots on the open semicircle blocking the expected approach.
std::vector<DesiredState> gather_targets(const HerdingParams& params, int n_defenders,
                                         double approach_angle, Vec2 protected_center);

/// Slots on the net circle around the flock center, moving with it.
std::vector<DesiredState> stringnet_targets(const HerdingParams& params, int n_defenders,
                                            double base_angle, Vec2 flock_center,
                                            Vec2 flock_vel);

/// Rigid slots around the virtual formation agent, with full feedforward.
std::vector<DesiredState> herd_targets(const AgentState& formation, Vec2 formation_accel,
                                       double drag, const HerdingParams& params,
                                       int n_defenders, double base_angle);

/// Smallest defender count that leaves the flock room inside the net.
int min_defenders(double connectivity_radius, double formation_tol,
                  double net_radius_max);

/// Repulsion from nearby defenders and obstacle contour projections.
Vec2 defender_collision_accel(const AgentState& self, int self_index,
                              std::span<const AgentState> defenders,
                              std::span<const Obstacle> obstacles,
                              const HerdingParams& params);

/// Finite-time slot tracking used while gathering and waiting.
Vec2 gather_control(const AgentState& self, int self_index, const DesiredState& desired,
                    std::span<const AgentState> defenders,
                    std::span<const Obstacle> obstacles, const HerdingParams& params,
                    double drag);

/// Linear slot tracking plus repulsion from the flock region boundary.
Vec2 form_control(const AgentState& self, int self_index, const DesiredState& desired,
                  std::span<const AgentState> defenders,
                  std::span<const Obstacle> obstacles, Vec2 flock_center, Vec2 flock_vel,
                  const HerdingParams& params, double drag);

/// Linear slot tracking with acceleration feedforward during herding.
Vec2 herd_control(const AgentState& self, int self_index, const DesiredState& desired,
                  std::span<const AgentState> defenders,
                  std::span<const Obstacle> obstacles, const HerdingParams& params,
                  double drag);

/// Saturated acceleration of the virtual formation agent toward the safe area.
Vec2 virtual_agent_accel(const AgentState& formation, Vec2 safe_center,
                         std::span<const Obstacle> obstacles,
                         const HerdingParams& params);

struct PhaseEvent {
  std::string kind;
  std::string detail;
};

/// Advance the latching phase machine one step; returns emitted events.
std::vector<PhaseEvent> advance_phase(MissionState& mission,
                                      std::span<const AgentState> attackers,
                                      std::span<const AgentState> defenders,
                                      const HerdingParams& params, Vec2 protected_center,
                                      Vec2 safe_center);

}  // namespace stringnet
