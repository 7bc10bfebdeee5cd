#pragma once

#include <Eigen/Dense>
#include <deque>
#include <optional>
#include <vector>

#include "asknav/grid.hpp"
#include "asknav/rng.hpp"

namespace asknav {

struct RewardConfig;  // reward.hpp

enum class Heading : int { North = 0, East = 1, South = 2, West = 3 };

// Unit step along a heading. North is -y, East is +x.
Cell heading_step(Heading h);
Heading rotate_left(Heading h);
Heading rotate_right(Heading h);

enum class Action : int {
  MoveAhead = 0,
  MoveBack = 1,
  RotateLeft = 2,
  RotateRight = 3,
  Pass = 4,
  Stop = 5,
  Ask = 6,  // legal only when the episode has feedback capability
};

inline constexpr int kBaseActionCount = 6;

const char* action_name(Action a);

struct Pose {
  Cell cell;
  Heading heading = Heading::North;
};

struct ObjectInstance {
  int class_id = 0;
  Cell cell;
};

struct EnvConfig {
  int grid_w = 11;
  int grid_h = 11;
  double obstacle_density = 0.15;
  int num_objects = 6;
  int vocab_size = 12;
  int max_steps = 200;
  double success_radius_m = 1.0;
  double cell_size_m = 0.25;
  int view_k = 7;
  bool require_visible_at_stop = false;
  int obs_stack = 1;

  void validate() const;
  // Window channels: occupied, visible, |vocab| class one-hots, feedback.
  int window_channels() const { return vocab_size + 3; }
  int window_dim() const { return view_k * view_k * window_channels(); }
  int aux_dim(bool ask_enabled) const {
    return vocab_size + 1 + action_count(ask_enabled);
  }
  int view_dim(bool ask_enabled) const { return window_dim() + aux_dim(ask_enabled); }
  int obs_dim(bool ask_enabled) const { return obs_stack * view_dim(ask_enabled); }
  static int action_count(bool ask_enabled) {
    return kBaseActionCount + (ask_enabled ? 1 : 0);
  }
};

// One fully-specified episode. Everything the dynamics need is fixed here;
// mutable quantities live in EpisodeState.
struct EpisodeSpec {
  GridMap grid;
  std::vector<ObjectInstance> objects;
  int target_class = 0;
  Pose start_pose;
  bool teacher_present = false;
  bool ask_enabled = false;
  int feedback_persistence_steps = 1;
  int max_steps = 200;
  double success_radius_m = 1.0;
  EnvConfig cfg;

  Cell target_cell() const;
};

// Free cells whose center lies within success_radius_m of the target cell
// center (inclusive bound).
std::vector<Cell> success_region(const EpisodeSpec& spec);

struct EpisodeState {
  Pose pose;
  int steps = 0;
  int path_cells = 0;  // executed cell translations, the SPL path length
  int ask_count = 0;
  bool done = false;
  bool success = false;
  int feedback_ttl = 0;     // rendered views left that carry the ask mask
  int last_action = -1;     // -1 before the first action
  std::vector<int> goal_distance;  // BFS field to the success region
  int shortest_path = 0;           // geodesic start -> success region (SPL's l)
};

EpisodeState init_state(const EpisodeSpec& spec);

// Egocentric observation: K x K window with the agent at bottom-center
// facing up, plus the auxiliary vector (target one-hot, presence bit,
// last-action one-hot). All entries are 0/1.
struct EgoView {
  int k = 0;
  int channels = 0;
  Eigen::VectorXd window;  // flattened (row, col, channel); row 0 is farthest
  Eigen::VectorXd aux;

  double at(int r, int c, int ch) const { return window[(r * k + c) * channels + ch]; }
  double& at(int r, int c, int ch) { return window[(r * k + c) * channels + ch]; }
  Eigen::VectorXd flat() const;
};

inline constexpr int kChOccupied = 0;
inline constexpr int kChVisible = 1;
inline constexpr int kChClassBase = 2;  // + class_id
inline int feedback_channel(int vocab_size) { return vocab_size + 2; }

// Maps an egocentric window index to the world cell it covers, given the
// agent pose. May land out of bounds.
Cell ego_to_world(const Pose& pose, int k, int r, int c);

// Renders the observation for the current state. Cells without line of
// sight from the agent (and out-of-bounds cells) read as occupied and not
// visible; class channels are populated for visible cells only.
// feedback_mask, when given, is a K x K {0,1} array copied into the
// feedback channel.
EgoView render_egoview(const EpisodeSpec& spec, const EpisodeState& state,
                       const Eigen::ArrayXXd* feedback_mask = nullptr);

// render_egoview plus the feedback channel implied by state.feedback_ttl.
EgoView current_view(const EpisodeSpec& spec, const EpisodeState& state);

// Distance-only success test (inclusive radius); optionally also requires
// line of sight to the target when cfg.require_visible_at_stop is set.
bool success_check(const EpisodeSpec& spec, const EpisodeState& state);

struct StepInfo {
  int geodesic_before = 0;
  int geodesic_after = 0;
  int path_length_so_far = 0;
};

struct StepOutcome {
  EgoView next_view;
  double reward = 0.0;
  bool done = false;
  bool success = false;
  StepInfo info;
};

// Advances one timestep. Collisions are silent no-ops; Ask resolves against
// the teacher and marks the next views per feedback persistence; the episode
// times out with success=false at max_steps. Throws ContractError when
// called after done or with Ask while feedback is disabled.
StepOutcome step(const EpisodeSpec& spec, EpisodeState& state, Action action,
                 const RewardConfig& reward_cfg);

// Uniformly randomized episode: obstacle layout resampled until the free
// cells form one connected component, target class drawn from target_pool,
// object cells and start drawn without collision, start outside the success
// region with a finite geodesic. Throws ConfigError when the configuration
// cannot produce a valid episode.
EpisodeSpec generate_episode(Rng& rng, const EnvConfig& cfg, const std::vector<int>& target_pool);

// Rolling window over the last obs_stack flattened views. The first view of
// an episode is replicated to fill the stack.
class ObsStacker {
 public:
  ObsStacker(int obs_stack, int view_dim) : stack_(obs_stack), view_dim_(view_dim) {}

  void reset(const EgoView& first);
  void push(const EgoView& view);
  Eigen::VectorXd stacked() const;

 private:
  int stack_;
  int view_dim_;
  std::deque<Eigen::VectorXd> frames_;
};

}  // namespace asknav
