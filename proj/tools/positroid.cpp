// positroid: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 mismatch, 2 parse or usage error, 3 not connected,
// 4 invalid fixture, 5 inconsistent fixture, 6 anything else.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "positroid/positroid.h"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kNotConnected = 3, kInvalid = 4, kInconsistent = 5, kOther = 6 };

int exit_for(pos_status s) {
  switch (s) {
    case POS_OK: return kOk;
    case POS_ERR_MISMATCH: return kMismatch;
    case POS_ERR_PARSE:
    case POS_ERR_ARGUMENT: return kParse;
    case POS_ERR_NOT_CONNECTED: return kNotConnected;
    case POS_ERR_INVALID_MODEL: return kInvalid;
    case POS_ERR_INCONSISTENT: return kInconsistent;
    default: return kOther;
  }
}

int report(pos_status s) {
  std::cerr << "error: " << pos_status_name(s);
  if (*pos_last_error()) std::cerr << ": " << pos_last_error();
  std::cerr << "\n";
  return exit_for(s);
}

struct PermDeleter {
  void operator()(pos_perm* p) const { pos_perm_free(p); }
};
struct ModelDeleter {
  void operator()(pos_model* m) const { pos_model_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { pos_string_free(s); }
};
using PermPtr = std::unique_ptr<pos_perm, PermDeleter>;
using ModelPtr = std::unique_ptr<pos_model, ModelDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

const std::map<std::string, pos_bridge_order> kOrders{
    {"lex-least", POS_ORDER_LEX_LEAST}, {"lex-greatest", POS_ORDER_LEX_GREATEST}, {"random", POS_ORDER_RANDOM}};

// Parses and requires connectedness; returns an exit code on failure.
int load_perm(const std::string& text, PermPtr& out) {
  pos_perm* p = nullptr;
  pos_status s = pos_perm_parse(text.c_str(), &p);
  if (s != POS_OK) return report(s);
  out.reset(p);
  if (!pos_perm_is_connected(p)) {
    std::cerr << "error: not connected: " << text << "\n";
    return kNotConnected;
  }
  return kOk;
}

int cmd_analyze(const std::string& perm, const std::string& format) {
  PermPtr p;
  if (int rc = load_perm(perm, p)) return rc;
  pos_format f = format == "json" ? POS_FORMAT_JSON : format == "dot" ? POS_FORMAT_DOT : POS_FORMAT_TEXT;
  char* out = nullptr;
  pos_status s = pos_analyze(p.get(), f, &out);
  if (s != POS_OK) return report(s);
  Text t(out);
  std::cout << t.get();
  return kOk;
}

int cmd_generate(const std::string& perm, pos_bridge_order order, std::uint64_t seed) {
  PermPtr p;
  if (int rc = load_perm(perm, p)) return rc;
  pos_model* m = nullptr;
  pos_status s = pos_model_realize(p.get(), order, seed, &m);
  if (s != POS_OK) return report(s);
  ModelPtr model(m);
  char* out = nullptr;
  s = pos_model_to_json(m, &out);
  if (s != POS_OK) return report(s);
  Text t(out);
  std::cout << t.get();
  return kOk;
}

int cmd_oracle(const std::string& path, const std::vector<int>& pair, bool all, bool relations) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kInvalid;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  pos_model* m = nullptr;
  pos_status s = pos_model_from_json(buf.str().c_str(), &m);
  if (s != POS_OK) return report(s);
  ModelPtr model(m);

  char* problems = nullptr;
  s = pos_model_check(m, &problems);
  Text pt(problems);
  if (s != POS_OK) {
    if (pt && *pt) std::cerr << pt.get();
    return report(s);
  }
  int v1 = pair.size() == 2 ? pair[0] : 0;
  int v2 = pair.size() == 2 ? pair[1] : 0;
  char* out = nullptr;
  s = pos_oracle_report(m, all ? 1 : 0, v1, v2, relations ? 1 : 0, &out);
  Text t(out);
  if (t) std::cout << t.get();
  if (s != POS_OK) return report(s);
  return kOk;
}

int cmd_crosscheck(const std::vector<std::string>& perms, int enumerate, int threads, pos_bridge_order order,
                   std::uint64_t seed, const std::vector<std::string>& relations) {
  std::vector<PermPtr> owned;
  pos_perm** enumerated = nullptr;
  std::size_t count = 0;
  std::vector<const pos_perm*> list;
  if (enumerate > 0) {
    pos_status s = pos_perm_enumerate(enumerate, &enumerated, &count);
    if (s != POS_OK) return report(s);
    for (std::size_t i = 0; i < count; ++i) list.push_back(enumerated[i]);
  }
  for (const std::string& text : perms) {
    PermPtr p;
    if (int rc = load_perm(text, p)) {
      pos_perm_array_free(enumerated, count);
      return rc;
    }
    list.push_back(p.get());
    owned.push_back(std::move(p));
  }
  std::vector<const char*> rel;
  for (const std::string& r : relations) rel.push_back(r.c_str());
  pos_crosscheck_options opt{order, seed, threads, rel.data(), rel.size()};

  auto start = std::chrono::steady_clock::now();
  char* out = nullptr;
  pos_status s = pos_crosscheck(list.data(), list.size(), &opt, &out);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  pos_perm_array_free(enumerated, count);
  Text t(out);
  if (t) std::cout << t.get();
  std::cerr << "checked " << list.size() << " permutation(s) in " << secs << " s\n";
  if (s != POS_OK) return report(s);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary algebras of positroid dimer models"};
  app.require_subcommand(1);

  std::string perm, format = "text", order_name = "lex-least", model_path;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "Quiver and relations from a decorated permutation");
  analyze->add_option("permutation", perm, "one-line notation, e.g. \"2 5 6 1 3 4\"")->required();
  analyze->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* generate = app.add_subcommand("generate", "Dimer model JSON realizing a permutation");
  generate->add_option("permutation", perm)->required();
  generate->add_option("--order", order_name, "bridge order")->check(CLI::IsMember({"lex-least", "lex-greatest", "random"}));
  generate->add_option("--seed", seed, "seed for --order random");

  std::vector<int> pair;
  bool all = false, relations = false;
  auto* oracle = app.add_subcommand("oracle", "Path-rewriting oracle on a dimer model fixture");
  oracle->add_option("model", model_path, "dimer model JSON file")->required();
  auto* pair_opt = oracle->add_option("--pair", pair, "v1 v2")->expected(2);
  oracle->add_flag("--all", all, "every ordered boundary pair")->excludes(pair_opt);
  oracle->add_flag("--relations", relations, "verify every emitted relation");

  std::vector<std::string> perms, extra;
  int enumerate = 0;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* crosscheck = app.add_subcommand("crosscheck", "Oracle versus formulas on generated models");
  crosscheck->add_option("permutation", perms, "permutations to check");
  crosscheck->add_option("--enumerate", enumerate, "every connected permutation of [n]")->check(CLI::Range(2, 12));
  crosscheck->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  crosscheck->add_option("--order", order_name, "bridge order")->check(CLI::IsMember({"lex-least", "lex-greatest", "random"}));
  crosscheck->add_option("--seed", seed, "seed for --order random");
  crosscheck->add_option("--relation", extra, "extra relation \"LHS = RHS\", e.g. \"A(2,5) x5 A(6,9) = y1 y9\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  pos_bridge_order order = kOrders.at(order_name);
  if (*analyze) return cmd_analyze(perm, format);
  if (*generate) return cmd_generate(perm, order, seed);
  if (*oracle) {
    if (!all && pair.empty() && !relations) {
      std::cerr << "error: give --pair v1 v2, --all or --relations\n";
      return kParse;
    }
    return cmd_oracle(model_path, pair, all, relations);
  }
  if (perms.empty() && enumerate == 0) {
    std::cerr << "error: give a permutation or --enumerate n\n";
    return kParse;
  }
  return cmd_crosscheck(perms, enumerate, threads, order, seed, extra);
}
