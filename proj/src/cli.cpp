#include "nearfac/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nearfac/constructions.hpp"
#include "nearfac/corpus.hpp"
#include "nearfac/enumerate.hpp"
#include "nearfac/errors.hpp"
#include "nearfac/graph.hpp"
#include "nearfac/json_io.hpp"
#include "nearfac/pecher.hpp"
#include "nearfac/sedf.hpp"

namespace nearfac::cli {

namespace {

// Splits on commas outside parentheses, so "(a,c),(b,e)" gives two items.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

ElementSet parse_list(const FiniteGroup& g, const std::string& text, const std::string& what) {
  std::vector<Element> xs;
  for (const auto& item : split_list(text)) {
    try {
      xs.push_back(g.parse_element(item));
    } catch (const DomainError& e) {
      throw DomainError(what + ": " + e.what());
    }
  }
  try {
    return make_set(std::move(xs));
  } catch (const DomainError& e) {
    throw DomainError(what + ": " + e.what());
  }
}

std::string render_set(const FiniteGroup& g, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + g.render(s[i]);
  return out + "}";
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << j.dump(2) << '\n';
}

struct NfSource {
  std::string in;
  std::string group;
  std::string a;
  std::string b;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in, "NF record (JSON)");
    cmd->add_option("--group", group, "group descriptor, e.g. Z:16, D:8, D5xC5, C5sqC2");
    cmd->add_option("--A", a, "comma-separated elements of A");
    cmd->add_option("--B", b, "comma-separated elements of B");
  }

  NearFactorization load() const {
    if (!in.empty()) return nf_from_json(read_json_file(in));
    if (group.empty()) throw DomainError("give --in, or --group with --A and --B");
    auto g = make_group(group);
    return NearFactorization(g, parse_list(*g, a, "A"), parse_list(*g, b, "B"));
  }
};

int seed_corpus(const std::string& dir, std::ostream& out) {
  Json all = Json::array();
  for (const auto& f : fixtures()) {
    auto rec = to_json(load(f));
    rec["name"] = f.name;
    if (!f.note.empty()) rec["note"] = f.note;
    if (dir.empty()) {
      all.push_back(rec);
    } else {
      std::filesystem::create_directories(dir);
      std::ofstream file(std::filesystem::path(dir) / (f.name + ".json"));
      if (!file) throw DomainError("cannot write into " + dir);
      file << rec.dump(2) << '\n';
    }
  }
  if (dir.empty()) {
    out << all.dump(2) << '\n';
  } else {
    out << "wrote " << fixtures().size() << " fixtures to " << dir << '\n';
  }
  return kOk;
}

int do_verify(const NfSource& src, bool json, std::ostream& out) {
  auto nf = src.load();
  auto report = verify(nf);
  const auto& g = *nf.group();
  if (json) {
    out << Json{{"nf", to_json(nf)}, {"report", to_json(report, g)}}.dump(2) << '\n';
  } else if (report.is_nf) {
    out << "near-factorization: " << nf.to_string() << " is a (" << nf.k() << "," << nf.l() << ")-NF\n";
  } else {
    out << "not a near-factorization: " << report.reason << '\n';
    if (report.identity_representations) out << "identity represented " << report.identity_representations << " times\n";
    if (!report.uncovered.empty()) out << "uncovered: " << render_set(g, report.uncovered) << '\n';
    if (!report.multiply_covered.empty()) {
      out << "multiply covered:";
      for (auto [x, n] : report.multiply_covered) out << ' ' << g.render(x) << " (" << n << ")";
      out << '\n';
    }
  }
  return report.is_nf ? kOk : kFalse;
}

std::vector<std::uint32_t> parse_seq(const std::string& text) {
  std::vector<std::uint32_t> seq;
  for (const auto& item : split_list(text)) {
    try {
      seq.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw DomainError("bad blowup sequence entry '" + item + "'");
    }
  }
  return seq;
}

int do_equiv(const std::string& in1, const std::string& in2, bool json, std::ostream& out) {
  auto nf1 = nf_from_json(read_json_file(in1));
  auto nf2 = nf_from_json(read_json_file(in2));
  auto w = are_equivalent(nf1, nf2);
  if (json) {
    Json j{{"equivalent", w.has_value()}};
    if (w) {
      j["witness"] = to_json(w->map);
      j["verified"] = w->verified;
    }
    out << j.dump(2) << '\n';
  } else if (w) {
    out << "equivalent, witness " << w->map.describe() << '\n';
  } else {
    out << "not equivalent\n";
  }
  return w ? kOk : kFalse;
}

int do_graph(const NfSource& src, bool report, bool json, std::ostream& out) {
  auto nf = src.load();
  auto g = build_p_graph(nf);
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(std::to_string(u) + " " + std::to_string(v));
  Json j{{"order", g.order()}, {"edge_count", g.edge_count()}, {"edges", edges}};
  if (report) j["report"] = to_json(critical_report(g));
  if (json) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "order " << g.order() << ", " << g.edge_count() << " edges\n";
  if (report) {
    const auto& r = j["report"];
    out << "alpha " << r["alpha"] << ", omega " << r["omega"] << ", " << r["alpha_critical_edges"].size()
        << " alpha-critical edges, " << r["omega_critical_nonedges"].size() << " omega-critical non-edges, "
        << (r["alternating"].get<bool>() ? "alternating" : "not alternating") << '\n';
  }
  out << g.edge_list();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, canonicalize and enumerate near-factorizations of finite groups.", "nearfac"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  std::string seed_dir;
  auto* seed = app.add_option("--seed-corpus", seed_dir, "emit every published NF as JSON (to DIR if given)")
                   ->expected(0, 1);

  auto* verify_cmd = app.add_subcommand("verify", "check that (A, B) is a near-factorization");
  NfSource verify_src;
  verify_src.attach(verify_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "build a known near-factorization");
  construct_cmd->require_subcommand(1);
  std::string construct_out;
  construct_cmd->add_option("--out", construct_out, "write the NF record here");
  std::uint32_t dc_n = 0, dc_k = 0, bs_r = 0;
  auto* decaen_cmd = construct_cmd->add_subcommand("decaen", "de Caen family (k, l)-NF of D_n");
  decaen_cmd->add_option("--n", dc_n)->required();
  decaen_cmd->add_option("--k", dc_k)->required();
  auto* bacso_cmd = construct_cmd->add_subcommand("bacso", "Bacso family NF of D_(2^(2r-1))");
  bacso_cmd->add_option("--r", bs_r)->required();
  std::string seq_text;
  auto* blowup_cmd = construct_cmd->add_subcommand("blowup", "(-A, B) from a blowup sequence");
  blowup_cmd->add_option("--seq", seq_text, "a,a or j,j,k,k")->required();
  std::string trivial_group;
  auto* trivial_cmd = construct_cmd->add_subcommand("trivial", "({e}, G - e)");
  trivial_cmd->add_option("--group", trivial_group)->required();

  auto* pecher_cmd = app.add_subcommand("pecher", "Pecher transform between Z_2n and D_n, n odd");
  std::string pecher_dir = "forward", pecher_in, pecher_out;
  pecher_cmd->add_option("--dir", pecher_dir)->check(CLI::IsMember({"forward", "inverse"}));
  pecher_cmd->add_option("--in", pecher_in)->required();
  pecher_cmd->add_option("--out", pecher_out);

  auto* canon_cmd = app.add_subcommand("canon", "canonical form and the map reaching it");
  NfSource canon_src;
  canon_src.attach(canon_cmd);

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence and print a witness");
  std::string in1, in2;
  equiv_cmd->add_option("--in1", in1)->required();
  equiv_cmd->add_option("--in2", in2)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "all NFs of a group up to equivalence");
  std::string enum_group, restrict_text = "all", enum_out, checkpoint;
  std::uint32_t enum_k = 0, sweep_min = 3, sweep_max = 0;
  unsigned threads = 0;
  Budget budget;
  enum_cmd->add_option("--group", enum_group);
  enum_cmd->add_option("--k", enum_k);
  enum_cmd->add_option("--restrict", restrict_text, "all, symmetric or strong");
  enum_cmd->add_option("--out", enum_out, "write the result JSON here");
  enum_cmd->add_option("--checkpoint", checkpoint, "NDJSON progress file; resumes if present");
  enum_cmd->add_option("--threads", threads);
  enum_cmd->add_option("--max-nodes", budget.max_nodes);
  enum_cmd->add_option("--max-seconds", budget.max_seconds);
  enum_cmd->add_option("--sweep-min", sweep_min, "dihedral sweep: smallest n");
  enum_cmd->add_option("--sweep", sweep_max, "dihedral sweep: every (k, l) for D_n, n <= N");

  auto* gsedf_cmd = app.add_subcommand("gsedf", "generalized strong external difference families");
  gsedf_cmd->require_subcommand(1);
  std::string gsedf_in;
  auto* gsedf_verify = gsedf_cmd->add_subcommand("verify", "check a GSEDF instance");
  gsedf_verify->add_option("--in", gsedf_in)->required();
  auto* gsedf_from_nf = gsedf_cmd->add_subcommand("from-nf", "(A, B) -> (-A, B) instance");
  NfSource gsedf_src;
  gsedf_src.attach(gsedf_from_nf);

  auto* graph_cmd = app.add_subcommand("graph", "the graph P(G, A, B)");
  NfSource graph_src;
  graph_src.attach(graph_cmd);
  bool graph_report = false;
  graph_cmd->add_flag("--report", graph_report, "alpha, omega, critical edges and non-edges");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (seed->count() > 0) return seed_corpus(seed_dir, out);
    if (app.get_subcommands().empty()) {
      out << app.help();
      return kUsage;
    }
    if (verify_cmd->parsed()) return do_verify(verify_src, json, out);
    if (construct_cmd->parsed()) {
      std::optional<NearFactorization> nf;
      if (decaen_cmd->parsed()) nf = decaen_nf(dc_n, dc_k);
      if (bacso_cmd->parsed()) nf = bacso_nf(bs_r);
      if (blowup_cmd->parsed()) nf = blowup_nf(parse_seq(seq_text));
      if (trivial_cmd->parsed()) nf = trivial_nf(make_group(trivial_group));
      write_json(to_json(*nf), construct_out, out);
      return kOk;
    }
    if (pecher_cmd->parsed()) {
      auto nf = nf_from_json(read_json_file(pecher_in));
      write_json(to_json(pecher_dir == "forward" ? pecher_forward(nf) : pecher_inverse(nf)), pecher_out, out);
      return kOk;
    }
    if (canon_cmd->parsed()) {
      auto c = canonicalize(canon_src.load());
      out << Json{{"canonical", to_json(c.form)}, {"map", to_json(c.map)}}.dump(2) << '\n';
      return kOk;
    }
    if (equiv_cmd->parsed()) return do_equiv(in1, in2, json, out);
    if (enum_cmd->parsed()) {
      if (sweep_max > 0) {
        Json rows = Json::array();
        bool complete = true;
        for (const auto& e : dihedral_sweep(sweep_min, sweep_max, budget, threads)) {
          rows.push_back(to_json(e));
          complete = complete && e.complete;
          if (!json) {
            out << "D_" << e.n << " (" << e.k << "," << e.l << "): " << e.classes << " class(es)"
                << (e.complete ? "" : " [incomplete]") << ", " << e.seconds << " s\n";
          }
        }
        if (json || !enum_out.empty()) write_json(rows, enum_out, out);
        return complete ? kOk : kFalse;
      }
      if (enum_group.empty() || enum_k == 0) throw DomainError("enumerate needs --group and --k (or --sweep N)");
      auto g = make_group(enum_group);
      if ((g->order() - 1) % enum_k != 0) throw DomainError("k must divide |G| - 1");
      SearchSpec spec{g->id(), enum_k, static_cast<std::uint32_t>((g->order() - 1) / enum_k),
                      parse_restriction(restrict_text), budget, threads, checkpoint};
      auto result = enumerate_nfs(spec);
      if (json || !enum_out.empty()) write_json(to_json(result), enum_out, out);
      if (!json) {
        out << result.classes.size() << " class(es) of (" << spec.k << "," << spec.l << ")-NFs of " << g->name()
            << " [" << to_string(spec.restrict) << "], " << (result.complete ? "complete" : "INCOMPLETE") << ", "
            << result.nodes_explored << " nodes, " << result.wall_seconds << " s\n";
        if (result.classes_up_to_swap) out << *result.classes_up_to_swap << " up to swapping A and B\n";
        for (const auto& c : result.classes) out << "  " << c.canonical.to_string() << '\n';
      }
      return result.complete ? kOk : kFalse;
    }
    if (gsedf_cmd->parsed()) {
      if (gsedf_verify->parsed()) {
        auto inst = gsedf_from_json(read_json_file(gsedf_in));
        auto rep = check_gsedf(inst);
        if (json) {
          out << Json{{"ok", rep.ok}, {"reason", rep.reason}}.dump(2) << '\n';
        } else {
          out << (rep.ok ? "GSEDF verified" : "not a GSEDF: " + rep.reason) << '\n';
        }
        return rep.ok ? kOk : kFalse;
      }
      out << to_json(nf_to_gsedf(gsedf_src.load())).dump(2) << '\n';
      return kOk;
    }
    if (graph_cmd->parsed()) return do_graph(graph_src, graph_report, json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nearfac::cli
