#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "propp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"propp: graphs of finite p-groups and free groups"};
  app.require_subcommand(1);
  propp::RunConfig cfg;
  std::string format = "json";
  int prime = 0;
  std::string dot;
  std::vector<std::string> positional;

  auto common = [&](CLI::App* s) {
    s->add_option("-i,--input", cfg.inputs, "graph JSON (twice for dominates / deformation)");
    s->add_option("inputs", positional, "graph JSON files");
    s->add_option("-p,--prime", prime, "override the prime");
    s->add_option("-r,--radius", cfg.radius, "ball radius (acyl uses at least k+2)");
    s->add_option("-b,--budget", cfg.budget, "cell cap (default PROPP_BUDGET or 50000)");
    s->add_option("-f,--format", format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    s->add_option("--seed", cfg.seed, "seed for randomized checks");
    s->add_option("--dot", dot, "write DOT to a file (no value: to stdout)")->expected(0, 1);
  };

  std::map<std::string, CLI::App*> subs;
  const std::map<std::string, std::string> about{
      {"validate", "check a graph and its JSON round trip"},
      {"present", "presentation of the fundamental group"},
      {"reduce", "remove fictitious edges"},
      {"collapse", "collapse a connected subgraph to one vertex"},
      {"refine", "replace a vertex by a graph of groups"},
      {"grushko", "free factors and additivity of rank"},
      {"rank", "rank of the abelianization mod p"},
      {"ball", "ball in the Bass-Serre tree"},
      {"geodesic", "path between two ball vertices"},
      {"fixed", "fixed subtree of elements"},
      {"acyl", "k-acylindricity check"},
      {"cylinders", "tree of cylinders"},
      {"aut-shape", "automorphism shape of a one-edge splitting"},
      {"free-split", "free splittings (amalgam, hnn, star, tree)"},
      {"mv", "Mayer-Vietoris edge map"},
      {"dominates", "does the first tree dominate the second"},
      {"deformation", "same deformation space"},
      {"jsj-certify", "JSJ certificate for finite vertex groups"},
      {"audit", "accessibility bounds"},
      {"moves", "expansion and reduction moves"}};
  for (const auto& name : propp::command_names()) subs[name] = app.add_subcommand(name, about.at(name));
  subs["jsj"] = app.add_subcommand("jsj", "certify, dominates, deformation or audit");
  subs["free-split"]->add_option("mode", cfg.mode, "amalgam, hnn, star or tree")->required();
  subs["jsj"]->add_option("mode", cfg.mode, "certify, dominates, deformation or audit")->required();
  for (auto& [name, s] : subs) common(s);

  subs["present"]->add_option("--tree", cfg.tree, "spanning tree edge names");
  subs["collapse"]->add_option("--vertices", cfg.vertices)->delimiter(',');
  subs["collapse"]->add_option("--edges", cfg.edges)->delimiter(',');
  subs["collapse"]->add_option("--name", cfg.name);
  subs["refine"]->add_option("--vertex", cfg.vertex);
  subs["refine"]->add_option("--inner", cfg.inner, "inner graph JSON");
  subs["geodesic"]->add_option("--from", cfg.from, "ball vertex index");
  subs["geodesic"]->add_option("--to", cfg.to, "ball vertex index");
  subs["fixed"]->add_option("-e,--element", cfg.elements, "presentation word");
  subs["acyl"]->add_option("-k", cfg.k);
  subs["cylinders"]->add_option("--relation", cfg.relation);
  subs["aut-shape"]->add_flag("--rigid1", cfg.rigid1);
  subs["aut-shape"]->add_flag("--rigid2", cfg.rigid2);
  subs["aut-shape"]->add_flag("--swap", cfg.swap);
  subs["moves"]->add_option("--edge", cfg.edge, "edge to reduce, or the new edge of an expansion");
  subs["moves"]->add_option("--vertex", cfg.vertex, "vertex to expand");
  subs["moves"]->add_option("--name", cfg.name, "new vertex of an expansion");
  subs["moves"]->add_option("--subgroup", cfg.subgroup, "local generator words of the new vertex group");
  subs["moves"]->add_option("--move", cfg.moved, "edge ends <edge>:<side> moved to the new vertex");

  CLI::App* chosen = nullptr;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  for (auto& [name, s] : subs)
    if (s->parsed()) chosen = s;
  cfg.command = chosen->get_name();
  cfg.inputs.insert(cfg.inputs.end(), positional.begin(), positional.end());
  if (prime) cfg.prime = static_cast<unsigned>(prime);
  cfg.format = format == "text" ? propp::OutputFormat::Text
               : format == "dot" ? propp::OutputFormat::Dot
                                 : propp::OutputFormat::Json;
  if (chosen->count("--dot")) cfg.dot_path = dot;
  return propp::run(cfg, std::cout);
}
