// Command-line surface for the semigroup / commuting-graph engine.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "commsemi/commgraph.hpp"
#include "commsemi/constructions.hpp"
#include "commsemi/lpaths.hpp"
#include "commsemi/verify.hpp"

namespace {

using namespace commsemi;

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    parts.push_back(item);
  }
  return parts;
}

int to_int(std::string const& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) {
    throw std::invalid_argument("not an integer: " + s);
  }
  return v;
}

// Semigroup specs: full:n, ideal:n:r, s0:k, s1:k, a catalog name, or
// cayley:<path> for a JSON Cayley table.
std::shared_ptr<FiniteSemigroup> parse_semigroup(std::string const& spec) {
  auto parts = split(spec, ':');
  auto const& head = parts[0];
  if (head == "full" && parts.size() == 2) {
    return std::make_shared<FiniteSemigroup>(
        FiniteSemigroup::full(to_int(parts[1])));
  }
  if (head == "ideal" && parts.size() == 3) {
    return std::make_shared<FiniteSemigroup>(
        FiniteSemigroup::ideal(to_int(parts[1]), to_int(parts[2])));
  }
  if (head == "s0" && parts.size() == 2) {
    return std::make_shared<FiniteSemigroup>(s0_band(to_int(parts[1])));
  }
  if (head == "s1" && parts.size() == 2) {
    return std::make_shared<FiniteSemigroup>(s1_band(to_int(parts[1])));
  }
  if (head == "cayley" && parts.size() >= 2) {
    std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) {
      throw std::invalid_argument("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return std::make_shared<FiniteSemigroup>(
        FiniteSemigroup::from_table(CayleyTable::from_json(buf.str())));
  }
  if (parts.size() == 1) {
    auto names = small_semigroup_names();
    if (std::find(names.begin(), names.end(), head) != names.end()) {
      return std::make_shared<FiniteSemigroup>(small_semigroup(head));
    }
  }
  throw std::invalid_argument("unknown semigroup spec: " + spec);
}

// Elements are named by label (table backends, band labels) or by a
// transformation literal like "[2,1,1]".
uint32_t parse_element(FiniteSemigroup const& s, std::string const& token) {
  if (auto i = s.index_of_label(token)) {
    return *i;
  }
  if (!token.empty() && token.front() == '[') {
    if (auto i = s.index_of(Transformation::parse(token))) {
      return *i;
    }
    throw std::invalid_argument(token + " is not an element of the semigroup");
  }
  throw std::invalid_argument("unknown element: " + token);
}

void print_witness(FiniteSemigroup const& s,
                   std::vector<uint32_t> const& path) {
  if (path.empty()) {
    return;
  }
  std::cout << "witness:";
  for (uint32_t e : path) {
    std::cout << " " << s.label(e);
  }
  std::cout << "\n";
}

std::pair<Transformation, Transformation> parse_witness_pair(
    std::vector<std::string> const& parts) {
  if (parts.size() == 4 && parts[1] == "tdia2") {
    return tdia2_witnesses(to_int(parts[2]), to_int(parts[3]));
  }
  if (parts.size() == 3 && parts[1] == "tdia3") {
    return tdia3_witnesses(to_int(parts[2]));
  }
  throw std::invalid_argument("unknown witness spec");
}

void cmd_construct(std::string const& name) {
  auto parts = split(name, ':');
  if (!parts.empty() && parts[0] == "witness") {
    auto [a, b] = parse_witness_pair(parts);
    std::cout << a.to_string() << "\n" << b.to_string() << "\n";
    return;
  }
  auto s = parse_semigroup(name);
  for (uint32_t i = 0; i < s->size(); ++i) {
    std::cout << s->label(i);
    if (s->is_transformational()) {
      std::cout << "\t" << s->element(i).to_string();
    }
    std::cout << "\n";
  }
  if (s->size() <= 30) {
    std::cout << "table:\n";
    for (uint32_t i = 0; i < s->size(); ++i) {
      for (uint32_t j = 0; j < s->size(); ++j) {
        std::cout << (j ? " " : "") << s->label(s->mul(i, j));
      }
      std::cout << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-semigroup commuting-graph engine"};
  app.require_subcommand(1);

  std::string spec, elem_a, elem_b, name, format = "dot", json_path;
  std::string suite;
  int degree_n = 0;
  uint64_t chain_n = 0;
  bool idem = false;
  VerifyConfig cfg;

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", cfg.budget, "largest materialized vertex count");
    c->add_option("--threads", cfg.threads, "worker thread count");
  };

  auto* c_diam = app.add_subcommand("diameter", "diameter of G(S)");
  c_diam->add_option("spec", spec)->required();
  c_diam->add_flag("--idempotent", idem, "use the idempotent graph GE(S)");
  add_budget(c_diam);

  auto* c_dist = app.add_subcommand("distance", "distance in G(S)");
  c_dist->add_option("spec", spec)->required();
  c_dist->add_option("a", elem_a)->required();
  c_dist->add_option("b", elem_b)->required();
  c_dist->add_flag("--idempotent", idem);
  add_budget(c_dist);

  auto* c_kd = app.add_subcommand("knit-degree", "knit degree of S");
  c_kd->add_option("spec", spec)->required();

  auto* c_an = app.add_subcommand("check-an", "check the quasi-identity (A_n)");
  c_an->add_option("spec", spec)->required();
  c_an->add_option("n", chain_n)->required();

  auto* c_q1 =
      app.add_subcommand("check-q1", "check the quasi-identity zx=zy => xy=yx");
  c_q1->add_option("spec", spec)->required();

  auto* c_cert =
      app.add_subcommand("certificate", "distance >= 5 certificate in G(T(n))");
  c_cert->add_option("n", degree_n)->required();
  c_cert->add_option("a", elem_a)->required();
  c_cert->add_option("b", elem_b)->required();

  auto* c_cons =
      app.add_subcommand("construct", "print a semigroup or witness pair");
  c_cons->add_option("name", name)->required();

  auto* c_exp = app.add_subcommand("export", "export G(S) as dot or json");
  c_exp->add_option("spec", spec)->required();
  c_exp->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "json"}));
  c_exp->add_flag("--idempotent", idem);

  auto* c_ver = app.add_subcommand("verify", "run a verification suite");
  c_ver->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"tdia", "tdia2", "tdia3", "bands", "schein",
                             "all"}));
  c_ver->add_option("--max-n", cfg.max_n);
  c_ver->add_option("--max-k", cfg.max_k);
  c_ver->add_option("--json", json_path, "write the JSON report here");
  add_budget(c_ver);

  CLI11_PARSE(app, argc, argv);

  try {
    GraphBudget budget;
    budget.max_materialized_vertices = cfg.budget;
    budget.threads = cfg.threads;

    if (c_diam->parsed()) {
      auto s = parse_semigroup(spec);
      auto g = idem ? CommutingGraph::idempotent(s) : CommutingGraph::of(s);
      auto d = g.diameter(budget);
      std::cout << d.to_string() << "\n";
      print_witness(*s, d.witness);
    } else if (c_dist->parsed()) {
      auto s = parse_semigroup(spec);
      auto g = idem ? CommutingGraph::idempotent(s) : CommutingGraph::of(s);
      auto d = g.distance(parse_element(*s, elem_a),
                          parse_element(*s, elem_b), budget);
      std::cout << d.to_string() << "\n";
      print_witness(*s, d.witness);
    } else if (c_kd->parsed()) {
      auto s = parse_semigroup(spec);
      auto kd = knit_degree(*s);
      if (!kd) {
        std::cout << "absent\n";
      } else {
        std::cout << kd->degree << "\n";
        print_witness(*s, kd->witness);
      }
    } else if (c_an->parsed()) {
      auto s = parse_semigroup(spec);
      auto rep = check_An(*s, chain_n);
      std::cout << (rep.holds ? "holds" : "fails") << "\n";
      print_witness(*s, rep.witness);
    } else if (c_q1->parsed()) {
      auto s = parse_semigroup(spec);
      auto rep = check_quasi_identity_1(*s);
      std::cout << (rep.holds ? "holds" : "fails") << "\n";
      print_witness(*s, rep.witness);
    } else if (c_cert->parsed()) {
      bool ok = lower_bound_certificate(degree_n, Transformation::parse(elem_a),
                                        Transformation::parse(elem_b));
      std::cout << (ok ? "true" : "false") << "\n";
    } else if (c_cons->parsed()) {
      cmd_construct(name);
    } else if (c_exp->parsed()) {
      auto s = parse_semigroup(spec);
      auto g = idem ? CommutingGraph::idempotent(s) : CommutingGraph::of(s);
      std::cout << (format == "dot" ? g.to_dot() : g.to_json());
    } else if (c_ver->parsed()) {
      Report rep;
      if (suite == "tdia") {
        rep = verify_tdia(cfg);
      } else if (suite == "tdia2") {
        rep = verify_tdia2(cfg);
      } else if (suite == "tdia3") {
        std::vector<int> cases;
        for (int n = 2; n <= cfg.max_n && n <= 8; ++n) {
          cases.push_back(n);
        }
        rep = verify_tdia3(cfg, cases);
      } else if (suite == "bands") {
        rep = verify_bands(cfg);
      } else if (suite == "schein") {
        rep = verify_schein(cfg);
      } else {
        rep = verify_all(cfg);
      }
      std::cout << rep.to_text();
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << rep.to_json() << "\n";
      }
      return rep.all_passed() ? 0 : 1;
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
