#include "curvelim/curvelim.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "curvelim/jobs.hpp"
#include "curvelim/json_io.hpp"
#include "curvelim/vessel.hpp"

struct curvelim_job {
  std::string command;
  curvelim::JobOptions opts;
  std::string report;
};

struct curvelim_vessel {
  curvelim::QVessel v;
};

struct curvelim_detrep {
  curvelim::DetRep d;
};

namespace {

thread_local std::string last_error;

curvelim_status fail(curvelim_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

curvelim_status ok() {
  last_error.clear();
  return CURVELIM_OK;
}

// Runs f, mapping library exceptions to status codes.
template <class F>
curvelim_status guarded(F&& f) {
  try {
    f();
    return ok();
  } catch (const curvelim::InputError& e) {
    return fail(CURVELIM_E_INPUT, e.what());
  } catch (const curvelim::TheoremCheckError& e) {
    return fail(CURVELIM_E_THEOREM, e.what());
  } catch (const curvelim::ConvergenceError& e) {
    return fail(CURVELIM_E_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(CURVELIM_E_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* curvelim_version(void) { return "0.1.0"; }

const char* curvelim_last_error(void) { return last_error.c_str(); }

size_t curvelim_command_count(void) { return curvelim::job_commands().size(); }

const char* curvelim_command_name(size_t index) {
  const auto& names = curvelim::job_commands();
  return index < names.size() ? names[index].c_str() : nullptr;
}

curvelim_status curvelim_job_create(const char* command, curvelim_job** out) {
  if (!command || !out) return fail(CURVELIM_E_INPUT, "null argument");
  const auto& names = curvelim::job_commands();
  if (std::find(names.begin(), names.end(), command) == names.end())
    return fail(CURVELIM_E_INPUT, std::string("unknown command \"") + command + "\"");
  *out = new curvelim_job{command, {}, {}};
  return ok();
}

void curvelim_job_destroy(curvelim_job* job) { delete job; }

curvelim_status curvelim_job_set_tol(curvelim_job* job, double tol) {
  if (!job) return fail(CURVELIM_E_INPUT, "null job");
  if (!(tol > 0.0 && tol < 1.0)) return fail(CURVELIM_E_INPUT, "tol must lie in (0, 1)");
  job->opts.tol = tol;
  return ok();
}

curvelim_status curvelim_job_set_seed(curvelim_job* job, uint64_t seed) {
  if (!job) return fail(CURVELIM_E_INPUT, "null job");
  job->opts.seed = seed;
  return ok();
}

curvelim_status curvelim_job_set_samples(curvelim_job* job, size_t samples) {
  if (!job) return fail(CURVELIM_E_INPUT, "null job");
  if (samples > 100000) return fail(CURVELIM_E_INPUT, "samples must be at most 100000");
  job->opts.samples = samples;
  return ok();
}

curvelim_status curvelim_job_run(curvelim_job* job, const char* input_json) {
  if (!job || !input_json) return fail(CURVELIM_E_INPUT, "null argument");
  const curvelim::JobResult r = curvelim::run_job(job->command, input_json, job->opts);
  job->report = r.report;
  const auto status = static_cast<curvelim_status>(r.exit_code);
  if (status == CURVELIM_OK) return ok();
  return fail(status, "job \"" + job->command + "\" finished with status " + std::to_string(r.exit_code));
}

const char* curvelim_job_report(const curvelim_job* job) { return job ? job->report.c_str() : ""; }

char* curvelim_job_report_copy(const curvelim_job* job) {
  if (!job) return nullptr;
  char* s = static_cast<char*>(std::malloc(job->report.size() + 1));
  if (s) std::memcpy(s, job->report.c_str(), job->report.size() + 1);
  return s;
}

void curvelim_string_free(char* s) { std::free(s); }

curvelim_status curvelim_vessel_parse(const char* json, curvelim_vessel** out) {
  if (!json || !out) return fail(CURVELIM_E_INPUT, "null argument");
  return guarded([&] {
    const auto j = curvelim::json_io::parse(json);
    *out = new curvelim_vessel{curvelim::json_io::decode_vessel(j, "")};
  });
}

void curvelim_vessel_destroy(curvelim_vessel* v) { delete v; }

curvelim_status curvelim_vessel_dims(const curvelim_vessel* v, size_t* dim_h, size_t* dim_e) {
  if (!v) return fail(CURVELIM_E_INPUT, "null vessel");
  if (dim_h) *dim_h = v->v.state_dim();
  if (dim_e) *dim_e = v->v.ext_dim();
  return ok();
}

curvelim_status curvelim_vessel_check(const curvelim_vessel* v, int* holds, unsigned* failing_mask) {
  if (!v) return fail(CURVELIM_E_INPUT, "null vessel");
  return guarded([&] {
    const auto r = curvelim::vessel_check(v->v);
    unsigned mask = 0;
    for (std::size_t k = 0; k < r.axioms.size(); ++k)
      if (!r.axioms[k].holds) mask |= 1u << k;
    if (!r.hermitian) mask |= 1u << 5;
    if (holds) *holds = r.ok() ? 1 : 0;
    if (failing_mask) *failing_mask = mask;
  });
}

curvelim_status curvelim_vessel_discriminant_equal(const curvelim_vessel* v, int* equal) {
  if (!v || !equal) return fail(CURVELIM_E_INPUT, "null argument");
  return guarded([&] { *equal = curvelim::discriminant(v->v).equal ? 1 : 0; });
}

curvelim_status curvelim_detrep_parse(const char* json, curvelim_detrep** out) {
  if (!json || !out) return fail(CURVELIM_E_INPUT, "null argument");
  return guarded([&] {
    const auto j = curvelim::json_io::parse(json);
    *out = new curvelim_detrep{curvelim::json_io::decode_detrep(j, "")};
  });
}

void curvelim_detrep_destroy(curvelim_detrep* d) { delete d; }

curvelim_status curvelim_detrep_size(const curvelim_detrep* d, size_t* m) {
  if (!d || !m) return fail(CURVELIM_E_INPUT, "null argument");
  *m = d->d.size();
  return ok();
}

curvelim_status curvelim_detrep_vn_dim(const curvelim_detrep* d, int n, size_t* dim) {
  if (!d || !dim) return fail(CURVELIM_E_INPUT, "null argument");
  if (n < 1 || n > 8) return fail(CURVELIM_E_INPUT, "n must lie in 1..8");
  return guarded([&] { *dim = curvelim::principal_subspace(d->d, n).space.dim(); });
}

}  // extern "C"
