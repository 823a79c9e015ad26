#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace propp {

enum class OutputFormat { Json, Text, Dot };

/// One CLI invocation. Fields that a command does not use are ignored.
struct RunConfig {
  std::string command;
  std::string mode;                 // free-split kind, jsj action
  std::vector<std::string> inputs;  // two for dominates / deformation
  std::optional<unsigned> prime;
  int radius = 2;
  long budget = 0;                  // 0: PROPP_BUDGET or the default cap
  OutputFormat format = OutputFormat::Json;
  unsigned long seed = 0;
  std::optional<std::string> dot_path;  // "" means stdout

  std::vector<std::string> vertices;  // collapse
  std::vector<std::string> edges;     // collapse
  std::string name;                   // collapse result, expansion vertex
  std::string vertex;                 // refine, expansion
  std::string inner;                  // refine: path of the inner graph
  std::vector<std::string> elements;  // fixed: generator words
  std::optional<int> from, to;        // geodesic: ball vertex indices
  int k = 1;                          // acyl
  std::string relation = "equality";
  bool rigid1 = false, rigid2 = false, swap = false;
  std::string edge;                   // moves: edge to reduce or create
  std::vector<std::string> subgroup;  // moves: expansion subgroup words
  std::vector<std::string> moved;     // moves: "edge:side" ends
  std::vector<std::string> tree;      // present: spanning tree edge names
};

/// RunConfig invariants; throws InvalidArgument.
void check_config(const RunConfig& c);

/// Runs a command, writing the report to `out`. Returns the exit code:
/// 0 yes/success, 1 negative verdict, 2 unknown, 3 error.
int run(const RunConfig& config, std::ostream& out);

const std::vector<std::string>& command_names();

}  // namespace propp
