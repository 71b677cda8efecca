#include "charrig.h"

#include "charrig/cochains.hpp"
#include "charrig/report.hpp"

#include <cstring>
#include <new>

struct charrig_complex {
  charrig::ComplexPtr x;
};

struct charrig_report {
  charrig::Report report;
  std::string canonical, pretty, hash;
};

namespace {

thread_local std::string last_error;

template <class F>
int guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return CHARRIG_OK;
  } catch (const charrig::Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return CHARRIG_E_INTERNAL;
}

int null_argument(const char* what) {
  last_error = std::string(what) + " is NULL";
  return CHARRIG_E_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* charrig_version(void) { return charrig::kToolVersion; }

const char* charrig_status_name(int status) {
  static const char* names[] = {"ok",          "parse",          "face_closure",     "duplicate", "degree",
                                "shape",       "ring",           "mismatch",         "not_a_cycle",
                                "not_in_image", "geometry_budget", "dimension",      "io",
                                "invalid_argument", "internal"};
  if (status < 0 || status > CHARRIG_E_INTERNAL) return "unknown";
  return names[status];
}

const char* charrig_last_error(void) { return last_error.c_str(); }

void charrig_options_init(charrig_options* o) {
  if (!o) return;
  *o = charrig_options{};
  o->max_subdiv = charrig::kDefaultMaxSubdiv;
  o->threads = 1;
}

int charrig_complex_load(const char* path, charrig_complex** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    auto x = charrig::load_complex_file(charrig::resolve_complex_path(path));
    *out = new charrig_complex{std::move(x)};
  });
}

int charrig_complex_parse(const char* json, charrig_complex** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new charrig_complex{charrig::load_complex(json)}; });
}

void charrig_complex_free(charrig_complex* x) { delete x; }

const char* charrig_complex_name(const charrig_complex* x) { return x ? x->x->name().c_str() : ""; }

int charrig_complex_dimension(const charrig_complex* x) { return x ? x->x->dimension() : -1; }

size_t charrig_complex_count(const charrig_complex* x, int j) {
  if (!x || j < 0 || j > x->x->dimension()) return 0;
  return x->x->count(j);
}

int charrig_cohomology(const charrig_complex* x, int j, const char* ring, char* buf, size_t size) {
  if (!x) return null_argument("complex");
  if (!ring) return null_argument("ring");
  if (!buf || size == 0) return null_argument("buf");
  buf[0] = '\0';
  return guarded([&] {
    if (j < 0) throw charrig::DegreeError("negative degree");
    const std::string text = charrig::describe_cohomology(*x->x, j, charrig::parse_ring(ring));
    if (text.size() + 1 > size) throw charrig::ShapeError("buffer too small for \"" + text + "\"");
    std::memcpy(buf, text.c_str(), text.size() + 1);
  });
}

int charrig_run(const char* command, const charrig_complex* x, const charrig_options* opts,
                charrig_report** out) {
  if (!command) return null_argument("command");
  if (!x) return null_argument("complex");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    charrig::RunOptions o;
    if (opts) {
      if (opts->degree_count > 0 && !opts->degrees) throw charrig::InvalidArgument("degrees is NULL");
      if (opts->pair_count > 0 && !opts->degree_pairs) throw charrig::InvalidArgument("degree_pairs is NULL");
      o.degrees.assign(opts->degrees, opts->degrees + opts->degree_count);
      for (size_t i = 0; i < opts->pair_count; ++i)
        o.degree_pairs.emplace_back(opts->degree_pairs[2 * i], opts->degree_pairs[2 * i + 1]);
      if (opts->cycle_path) o.cycle_path = opts->cycle_path;
      o.seed = opts->seed;
      o.max_subdiv = opts->max_subdiv;
      o.threads = opts->threads;
    }
    auto r = std::make_unique<charrig_report>();
    r->report = charrig::run_command(command, x->x, o);
    r->canonical = charrig::canonical_text(r->report);
    r->pretty = charrig::pretty_text(r->report);
    r->hash = r->report.doc.at("hash").get<std::string>();
    *out = r.release();
  });
}

void charrig_report_free(charrig_report* r) { delete r; }

int charrig_report_passed(const charrig_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t charrig_report_failures(const charrig_report* r) { return r ? r->report.failures() : 0; }

const char* charrig_report_canonical(const charrig_report* r) { return r ? r->canonical.c_str() : ""; }

const char* charrig_report_pretty(const charrig_report* r) { return r ? r->pretty.c_str() : ""; }

const char* charrig_report_hash(const charrig_report* r) { return r ? r->hash.c_str() : ""; }

}  // extern "C"
