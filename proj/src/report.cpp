#include "charrig/report.hpp"

#include "charrig/characters.hpp"
#include "charrig/diffcocycle.hpp"
#include "charrig/product.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace charrig {

namespace {

struct Task {
  std::string scope;
  std::function<CheckList()> run;
};

struct TaskResult {
  CheckList checks;
  double seconds = 0;
};

// Tasks write into their own slot; assembly walks the slots in order, so the
// thread count never changes the output.
std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<TaskResult> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        slots[i].checks = tasks[i].run();
      } catch (const std::exception& e) {
        slots[i].checks = {make_check("error", false, e.what())};
      }
      slots[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const std::size_t n = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return slots;
}

Json check_to_json(const std::string& scope, const Check& c) {
  return {{"scope", scope},
          {"name", c.name},
          {"status", status_name(c.status)},
          {"detail", c.detail},
          {"witness", c.witness}};
}

Json complex_json(const Complex& x) {
  Json counts = Json::array();
  for (int j = 0; j <= x.dimension(); ++j) counts.push_back(x.count(j));
  return {{"name", x.name()}, {"dimension", x.dimension()}, {"simplex_counts", counts}};
}

Json simplices_json(const Complex& x, int j) {
  Json arr = Json::array();
  for (const auto& s : x.simplices(j)) arr.push_back(s);
  return arr;
}

std::vector<int> resolved_degrees(const Complex& x, const RunOptions& o) {
  if (!o.degrees.empty()) return o.degrees;
  std::vector<int> ks;
  for (int k = 1; k <= x.dimension() + 1; ++k) ks.push_back(k);
  return ks;
}

std::vector<std::pair<int, int>> resolved_pairs(const Complex& x, const RunOptions& o) {
  if (!o.degree_pairs.empty()) return o.degree_pairs;
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= x.dimension(); ++k)
    for (int l = 1; k + l <= x.dimension() + 1; ++l) out.emplace_back(k, l);
  return out;
}

std::string k_scope(int k) { return "k=" + std::to_string(k); }

// Groups of the three rings, homology and the Lambda_Z generators, with the
// universal-coefficient consistency checks between them.
std::vector<Task> inspect_tasks(const ComplexPtr& x, Json& data) {
  const Complex& X = *x;
  Json groups = Json::object();
  for (int j = 0; j <= X.dimension() + 1; ++j) {
    Json lz = Json::array();
    if (j <= X.dimension())
      for (const auto& w : integral_form_generators(X, j)) lz.push_back(cochain_to_json(X, w));
    groups["H^" + std::to_string(j)] = {{"Z", describe_cohomology(X, j, Ring::kZ)},
                                        {"Q", describe_cohomology(X, j, Ring::kQ)},
                                        {"Q/Z", describe_cohomology(X, j, Ring::kQmodZ)},
                                        {"H_j", homology(X, j).group.describe()},
                                        {"lambda_Z_generators", lz}};
  }
  data["groups"] = std::move(groups);
  std::vector<Task> tasks;
  tasks.push_back({"groups", [x] {
                     const Complex& X = *x;
                     CheckList out;
                     for (int j = 0; j <= X.dimension() + 1; ++j) {
                       const auto& hz = integral_cohomology(X, j).group;
                       const auto& hj = homology(X, j).group;
                       const auto& hz_next = integral_cohomology(X, j + 1).group;
                       const std::string s = std::to_string(j);
                       out.push_back(make_check("inspect.H^" + s + ".rank", hz.rank() == hj.rank() &&
                                                    class_size(X, j, Ring::kQ) == hz.rank(),
                                                "rank H^" + s + "(Z) = rank H_" + s + " = dim H^" + s + "(Q)"));
                       out.push_back(make_check("inspect.H^" + s + ".torsion", hj.torsion() == hz_next.torsion(),
                                                "tors H_" + s + " = tors H^" + std::to_string(j + 1) + "(Z)"));
                       bool integral = true;
                       if (j <= X.dimension())
                         for (const auto& w : integral_form_generators(X, j)) integral = integral && is_integral_form(X, w);
                       out.push_back(make_check("inspect.lambda_Z^" + s + ".integral", integral,
                                                "generators are closed with integral periods"));
                     }
                     return out;
                   }});
  return tasks;
}

std::vector<Task> diagram_tasks(const SubdivisionTower& t, const RunOptions& o) {
  std::vector<Task> tasks;
  const ComplexPtr& x = t.base();
  for (int k : resolved_degrees(*x, o))
    tasks.push_back({k_scope(k), [&t, x, k, seed = o.seed] {
                       CheckList out = check_exactness(*x, k);
                       append(out, check_character_diagram(x, k, seed));
                       for (const auto& [name, phi] : standard_maps(t)) {
                         auto samples = sample_classes(phi.target(), k, seed, 8);
                         for (auto c : check_naturality(phi, k, samples)) {
                           c.name = "naturality." + name + "." + c.name;
                           out.push_back(std::move(c));
                         }
                       }
                       return out;
                     }});
  return tasks;
}

std::vector<Task> phi_tasks(const SubdivisionTower& t, const RunOptions& o) {
  std::vector<Task> tasks;
  for (int k : resolved_degrees(*t.base(), o))
    tasks.push_back({k_scope(k), [&t, k, o] { return check_phi(t, k, o.seed, o.max_subdiv); }});
  return tasks;
}

std::vector<Task> ring_tasks(const SubdivisionTower& t, const RunOptions& o) {
  std::vector<Task> tasks;
  for (auto [k, l] : resolved_pairs(*t.base(), o))
    tasks.push_back({"k=" + std::to_string(k) + ",l=" + std::to_string(l),
                     [&t, k = k, l = l, seed = o.seed] { return verify_ring_axioms(t, k, l, seed); }});
  return tasks;
}

IntVector load_cycle(const Complex& x, const std::string& path, int& degree) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read cycle file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  IntVector z = chain_from_json(x, doc, &degree);
  if (!is_zero(multiply(x.boundary(degree), z))) throw NotACycle(path + " is not a cycle");
  return z;
}

// Normalization and bounding artifacts for one cycle: P, b with
// z = d b + [P], and y, U' when [P] bounds.
Json pseudo_artifacts(const SubdivisionTower& t, int j, const IntVector& z, int max_depth) {
  const ComplexPtr& x = t.base();
  Json out = Json::object();
  if (j >= x->dimension()) return out;
  Normalization n = normalize_cycle(t, j, z, max_depth);
  const Complex& level = *t.level(n.depth);
  out["normalization"] = {
      {"depth", n.depth},
      {"P", {{"dimension", n.p.dimension},
             {"cells", simplices_json(*n.p.cells, n.p.dimension)},
             {"fundamental", integers_to_json(n.p.fundamental)},
             {"image", chain_to_json(level, j, n.p.pushed())}}},
      {"b", chain_to_json(level, j + 1, n.witness)},
      {"identity", is_zero(n.witness) && n.p.pushed() == n.cycle}};
  Bounding b = bound_in_good_neighborhood(t, n.p, max_depth);
  Json bj = {{"null_homologous", b.null_homologous},
             {"homology_class", integers_to_json(b.homology_class)},
             {"homology_group", b.homology_group}};
  if (b.null_homologous) {
    const Complex& lv = *t.level(b.depth);
    Json region = Json::array();
    const int top = b.region.space->dimension();
    for (std::size_t i : b.region.region.indices(top)) region.push_back(lv.simplex(top, i));
    bj["depth"] = b.depth;
    bj["y"] = chain_to_json(lv, j + 1, b.chain);
    bj["U"] = {{"level", b.region.level},
               {"top_simplices", region},
               {"collapses", b.certificate.collapses},
               {"collapsed_to_dimension", b.certificate.remaining_dimension}};
  }
  out["bounding"] = std::move(bj);
  return out;
}

std::vector<Task> pseudo_tasks(const SubdivisionTower& t, const RunOptions& o, Json& data) {
  std::vector<Task> tasks;
  const ComplexPtr& x = t.base();
  if (o.cycle_path) {
    int j = 0;
    IntVector z = load_cycle(*x, *o.cycle_path, j);
    const std::string label = std::filesystem::path(*o.cycle_path).stem().string();
    data["cycle"] = {{"label", label}, {"chain", chain_to_json(*x, j, z)}};
    data["artifacts"] = pseudo_artifacts(t, j, z, o.max_subdiv);
    tasks.push_back({"cycle", [&t, j, z, label, o] { return check_cycle_geometry(t, label, j, z, o.max_subdiv); }});
    return tasks;
  }
  for (int j = 0; j < x->dimension(); ++j)
    tasks.push_back({"j=" + std::to_string(j), [&t, j, o] {
                       CheckList out;
                       for (const auto& [name, z] : sample_cycles(*t.base(), j))
                         append(out, check_cycle_geometry(t, "H" + std::to_string(j) + "." + name, j, z,
                                                          o.max_subdiv));
                       return out;
                     }});
  return tasks;
}

void validate(const std::string& command, const RunOptions& o) {
  if (o.max_subdiv < 0 || o.max_subdiv > 2) throw InvalidArgument("--max-subdiv must be 0, 1 or 2");
  if (o.threads < 1) throw InvalidArgument("--threads must be positive");
  for (int k : o.degrees)
    if (k < 1) throw InvalidArgument("degrees must be at least 1");
  for (auto [k, l] : o.degree_pairs)
    if (k < 1 || l < 1) throw InvalidArgument("ring degrees must be at least 1");
  if (o.cycle_path && command != "pseudo") throw InvalidArgument("--cycle only applies to pseudo");
}

}  // namespace

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const { return doc.at("summary").at("fail").get<std::size_t>(); }

Report run_command(const std::string& command, const ComplexPtr& x, const RunOptions& o) {
  validate(command, o);
  SubdivisionTower t(x);
  Json data = Json::object();
  std::vector<Task> tasks;
  Json degrees = nullptr;
  if (command == "inspect") {
    tasks = inspect_tasks(x, data);
  } else if (command == "diagram" || command == "phi") {
    tasks = command == "diagram" ? diagram_tasks(t, o) : phi_tasks(t, o);
    degrees = resolved_degrees(*x, o);
    // The torsion identity is checked with the diagram's sign; the other
    // choice is the same statement after u -> -u.
    data["sign_convention"] = {{"checked", "delta2(i1(u)) = -B(u)"},
                               {"alternative", "delta2(i1(u)) = B(u), equivalent under u -> -u"}};
  } else if (command == "ring") {
    tasks = ring_tasks(t, o);
    degrees = Json::array();
    for (auto [k, l] : resolved_pairs(*x, o)) degrees.push_back({k, l});
  } else if (command == "pseudo") {
    tasks = pseudo_tasks(t, o, data);
  } else {
    throw InvalidArgument("unknown command '" + command + "'");
  }

  auto slots = run_tasks(tasks, o.threads);
  Report r;
  Json checks = Json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    r.timings[tasks[i].scope] = slots[i].seconds;
    for (const auto& c : slots[i].checks) {
      checks.push_back(check_to_json(tasks[i].scope, c));
      (c.status == CheckStatus::kPass ? pass : c.status == CheckStatus::kFail ? fail : skipped)++;
    }
  }
  r.doc = {{"tool", "charrig"},
           {"version", kToolVersion},
           {"command", command},
           {"complex", complex_json(*x)},
           {"seed", o.seed},
           {"max_subdiv", o.max_subdiv},
           {"degrees", degrees},
           {"checks", std::move(checks)},
           {"data", std::move(data)},
           {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"passed", fail == 0}}}};
  r.doc["hash"] = sha256_hex(r.doc.dump());
  return r;
}

std::string canonical_text(const Report& r) { return r.doc.dump() + "\n"; }

std::string pretty_text(const Report& r) {
  std::ostringstream os;
  const Json& d = r.doc;
  os << "charrig " << d.at("version").get<std::string>() << "  " << d.at("command").get<std::string>() << "  "
     << d.at("complex").at("name").get<std::string>() << "  seed " << d.at("seed") << "\n";
  if (d.at("data").contains("groups"))
    for (const auto& [j, g] : d.at("data").at("groups").items())
      os << "  " << j << ":  Z: " << g.at("Z").get<std::string>() << "   Q: " << g.at("Q").get<std::string>()
         << "   Q/Z: " << g.at("Q/Z").get<std::string>() << "   (H_j = " << g.at("H_j").get<std::string>()
         << ")\n";
  std::string scope;
  for (const auto& c : d.at("checks")) {
    if (c.at("scope") != scope) {
      scope = c.at("scope").get<std::string>();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2fs", r.timings.count(scope) ? r.timings.at(scope) : 0.0);
      os << "[" << scope << "]  " << buf << "\n";
    }
    const std::string status = c.at("status");
    os << "  " << (status == "pass" ? "ok  " : status == "fail" ? "FAIL" : "skip") << "  "
       << c.at("name").get<std::string>();
    const std::string detail = c.at("detail");
    if (!detail.empty()) os << "  -- " << detail;
    os << "\n";
  }
  const Json& s = d.at("summary");
  os << s.at("pass") << " passed, " << s.at("fail") << " failed, " << s.at("skipped") << " skipped\n";
  os << "hash " << d.at("hash").get<std::string>() << "\n";
  return os.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string resolve_complex_path(const std::string& arg) {
  namespace fs = std::filesystem;
  std::vector<fs::path> candidates;
  const fs::path p(arg);
  if (const char* env = std::getenv("CHARRIG_CORPUS"); env && *env) {
    const fs::path parent = p.parent_path();
    if (parent.empty() || parent.filename() == "corpus") {
      candidates.push_back(fs::path(env) / p.filename());
      candidates.push_back(fs::path(env) / (p.filename().string() + ".json"));
    }
  }
  candidates.push_back(p);
  candidates.push_back(fs::path(arg + ".json"));
  for (const auto& c : candidates)
    if (fs::is_regular_file(c)) return c.string();
  throw IoError("no complex file for '" + arg + "'");
}

}  // namespace charrig
