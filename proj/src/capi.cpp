#include "srl/srl.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "srl/compiler.hpp"
#include "srl/corpus.hpp"
#include "srl/error.hpp"
#include "srl/oracle.hpp"
#include "srl/parser.hpp"
#include "srl/solvers.hpp"

struct srl_collection {
  srl::Collection value;
};

struct srl_system {
  srl::CompiledSystem value;
};

struct srl_result {
  srl::SolveResult value;
};

struct srl_solution_set {
  srl::SolutionSet value;
  std::size_t dimension;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_line = 0;
thread_local std::size_t g_last_column = 0;

srl_status fail(srl_status status, const std::string& message) {
  g_last_error = message;
  g_last_line = 0;
  g_last_column = 0;
  return status;
}

// Runs fn, translating library exceptions into status codes.
template <class Fn>
srl_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return SRL_OK;
  } catch (const srl::ParseError& e) {
    g_last_error = e.what();
    g_last_line = e.span().line;
    g_last_column = e.span().column;
    return SRL_ERR_PARSE;
  } catch (const srl::UnknownName& e) {
    return fail(SRL_ERR_UNKNOWN_NAME, e.what());
  } catch (const srl::DomainError& e) {
    return fail(SRL_ERR_DOMAIN, e.what());
  } catch (const srl::InvalidCollection& e) {
    return fail(SRL_ERR_INVALID_COLLECTION, e.what());
  } catch (const srl::CostGuardExceeded& e) {
    return fail(SRL_ERR_COST_GUARD, e.what());
  } catch (const srl::InvalidArgument& e) {
    return fail(SRL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SRL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SRL_ERR_INTERNAL, "unknown error");
  }
}

srl::OperatorFamily to_cpp(srl_family f) {
  switch (f) {
    case SRL_FAMILY_STANDARD: return srl::OperatorFamily::Standard;
    case SRL_FAMILY_ALGEBRAIC: return srl::OperatorFamily::Algebraic;
    case SRL_FAMILY_BOUNDED: return srl::OperatorFamily::Bounded;
    case SRL_FAMILY_DRASTIC: return srl::OperatorFamily::Drastic;
  }
  throw srl::InvalidArgument("unknown family code");
}

srl_family to_c(srl::OperatorFamily f) {
  return static_cast<srl_family>(static_cast<int>(f));
}

srl::Method to_cpp(srl_method m) {
  switch (m) {
    case SRL_METHOD_NEWTON_RAPHSON: return srl::Method::NewtonRaphson;
    case SRL_METHOD_STEEPEST_DESCENT: return srl::Method::SteepestDescent;
    case SRL_METHOD_CONTROL: return srl::Method::Control;
  }
  throw srl::InvalidArgument("unknown method code");
}

srl_method to_c(srl::Method m) {
  return static_cast<srl_method>(static_cast<int>(m));
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw srl::InvalidArgument(std::string(what) + " is null");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const srl::CorpusEntry* corpus_at(std::size_t index) {
  static const auto names = srl::corpus_names();
  if (index >= names.size()) return nullptr;
  return &srl::builtin(names[index]);
}

srl::TruthVector truth_vector(const srl_system* s, const double* x) {
  require(x, "x");
  return srl::TruthVector(std::vector<double>(x, x + s->value.dimension()));
}

}  // namespace

extern "C" {

const char* srl_version(void) { return "1.0.0"; }
const char* srl_last_error(void) { return g_last_error.c_str(); }
size_t srl_last_error_line(void) { return g_last_line; }
size_t srl_last_error_column(void) { return g_last_column; }

const char* srl_status_string(srl_status status) {
  switch (status) {
    case SRL_OK: return "ok";
    case SRL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SRL_ERR_PARSE: return "parse error";
    case SRL_ERR_UNKNOWN_NAME: return "unknown name";
    case SRL_ERR_DOMAIN: return "domain error";
    case SRL_ERR_INVALID_COLLECTION: return "invalid collection";
    case SRL_ERR_COST_GUARD: return "cost guard exceeded";
    case SRL_ERR_IO: return "i/o error";
    case SRL_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SRL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

srl_status srl_family_from_name(const char* name, srl_family* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto fam = srl::family_from_name(name);
    if (!fam)
      throw srl::UnknownName(std::string("unknown family '") + name +
                             "'; valid: standard algebraic bounded drastic");
    *out = to_c(*fam);
  });
}

const char* srl_family_name(srl_family family) {
  switch (family) {
    case SRL_FAMILY_STANDARD: return "standard";
    case SRL_FAMILY_ALGEBRAIC: return "algebraic";
    case SRL_FAMILY_BOUNDED: return "bounded";
    case SRL_FAMILY_DRASTIC: return "drastic";
  }
  return "unknown";
}

int srl_family_is_continuous(srl_family family) {
  return family != SRL_FAMILY_DRASTIC;
}

srl_status srl_tnorm(srl_family family, double x, double y, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = srl::tnorm(to_cpp(family), x, y);
  });
}

srl_status srl_tconorm(srl_family family, double x, double y, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = srl::tconorm(to_cpp(family), x, y);
  });
}

srl_status srl_negate(srl_family family, double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = srl::negate(to_cpp(family), x);
  });
}

srl_status srl_method_from_name(const char* name, srl_method* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto m = srl::method_from_name(name);
    if (!m)
      throw srl::UnknownName(std::string("unknown solver '") + name +
                             "'; valid: nr sd control");
    *out = to_c(*m);
  });
}

const char* srl_method_name(srl_method method) {
  switch (method) {
    case SRL_METHOD_NEWTON_RAPHSON: return "nr";
    case SRL_METHOD_STEEPEST_DESCENT: return "sd";
    case SRL_METHOD_CONTROL: return "control";
  }
  return "unknown";
}

const char* srl_solve_status_name(srl_solve_status status) {
  switch (status) {
    case SRL_SOLVE_CONVERGED: return "converged";
    case SRL_SOLVE_MAX_ITERS_EXCEEDED: return "max_iters_exceeded";
    case SRL_SOLVE_SINGULAR_JACOBIAN: return "singular_jacobian";
    case SRL_SOLVE_DIVERGED: return "diverged";
  }
  return "unknown";
}

srl_status srl_collection_parse(const char* text, srl_collection** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new srl_collection{srl::parse_collection(text)};
  });
}

srl_status srl_collection_load_file(const char* path, srl_collection** out) {
  std::string text;
  const srl_status io = guarded([&] {
    require(path, "path");
    require(out, "out");
  });
  if (io != SRL_OK) return io;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    return fail(SRL_ERR_IO, e.what());
  }
  return srl_collection_parse(text.c_str(), out);
}

srl_status srl_collection_builtin(const char* name, srl_collection** out) {
  const srl_status checked = guarded([&] {
    require(name, "name");
    require(out, "out");
  });
  if (checked != SRL_OK) return checked;
  if (const char* dir = std::getenv("SRL_CORPUS_DIR"); dir != nullptr && *dir) {
    const auto path = std::filesystem::path(dir) / (std::string(name) + ".srl");
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec))
      return srl_collection_load_file(path.string().c_str(), out);
  }
  return guarded([&] { *out = new srl_collection{srl::builtin(name).collection}; });
}

void srl_collection_free(srl_collection* c) { delete c; }

size_t srl_collection_size(const srl_collection* c) {
  return c ? c->value.size : 0;
}

int srl_collection_is_boolean(const srl_collection* c) {
  return c && srl::is_boolean_collection(c->value) ? 1 : 0;
}

srl_status srl_collection_format(const srl_collection* c, char* buffer,
                                 size_t capacity, size_t* needed) {
  std::string text;
  const srl_status st = guarded([&] {
    require(c, "collection");
    text = srl::format_collection(c->value);
  });
  if (st != SRL_OK) return st;
  if (needed) *needed = text.size() + 1;
  if (buffer == nullptr || capacity < text.size() + 1) {
    if (buffer && capacity > 0) buffer[0] = '\0';
    return fail(SRL_ERR_BUFFER_TOO_SMALL,
                "format buffer needs " + std::to_string(text.size() + 1) +
                    " bytes");
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return SRL_OK;
}

srl_status srl_collection_check_midpoint(const srl_collection* c, int* applicable,
                                         int* holds) {
  return guarded([&] {
    require(c, "collection");
    const auto check = srl::check_midpoint(c->value);
    if (applicable) *applicable = check.applicable ? 1 : 0;
    if (holds) *holds = check.holds ? 1 : 0;
  });
}

size_t srl_corpus_count(void) { return srl::corpus_names().size(); }

const char* srl_corpus_name(size_t index) {
  const auto* e = corpus_at(index);
  return e ? e->name.c_str() : nullptr;
}

const char* srl_corpus_description(size_t index) {
  const auto* e = corpus_at(index);
  return e ? e->description.c_str() : nullptr;
}

const char* srl_corpus_source(size_t index) {
  const auto* e = corpus_at(index);
  return e ? e->source_text.c_str() : nullptr;
}

srl_status srl_system_compile(const srl_collection* c, srl_family family,
                              srl_system** out) {
  return guarded([&] {
    require(c, "collection");
    require(out, "out");
    *out = new srl_system{srl::CompiledSystem(c->value, to_cpp(family))};
  });
}

void srl_system_free(srl_system* s) { delete s; }

size_t srl_system_dimension(const srl_system* s) {
  return s ? s->value.dimension() : 0;
}

srl_family srl_system_family(const srl_system* s) {
  return s ? to_c(s->value.family()) : SRL_FAMILY_STANDARD;
}

srl_status srl_system_eval_f(const srl_system* s, const double* x, double* out) {
  return guarded([&] {
    require(s, "system");
    require(out, "out");
    const auto f = srl::eval_f(s->value, truth_vector(s, x));
    std::copy(f.begin(), f.end(), out);
  });
}

srl_status srl_system_residual(const srl_system* s, const double* x, double* out) {
  return guarded([&] {
    require(s, "system");
    require(out, "out");
    const auto r = srl::residual(s->value, truth_vector(s, x));
    std::copy(r.begin(), r.end(), out);
  });
}

srl_status srl_system_inconsistency(const srl_system* s, const double* x,
                                    double* out) {
  return guarded([&] {
    require(s, "system");
    require(out, "out");
    *out = srl::inconsistency(s->value, truth_vector(s, x));
  });
}

srl_status srl_system_jacobian(const srl_system* s, const double* x, double step,
                               double* out) {
  return guarded([&] {
    require(s, "system");
    require(out, "out");
    const auto g = srl::jacobian(s->value, truth_vector(s, x), step);
    std::copy(g.data.begin(), g.data.end(), out);
  });
}

srl_status srl_system_gradient(const srl_system* s, const double* x, double step,
                               double* out) {
  return guarded([&] {
    require(s, "system");
    require(out, "out");
    const auto g = srl::grad_inconsistency(s->value, truth_vector(s, x), step);
    std::copy(g.begin(), g.end(), out);
  });
}

void srl_solver_config_default(srl_method method, srl_solver_config* out) {
  if (!out) return;
  srl::SolverConfig cfg;
  try {
    cfg = srl::SolverConfig::defaults(to_cpp(method));
  } catch (...) {
    cfg = srl::SolverConfig::defaults(srl::Method::Control);
  }
  out->method = to_c(cfg.method);
  out->k = cfg.k;
  out->max_iters = cfg.max_iters;
  out->tol_step = cfg.tol_step;
  out->tol_residual = cfg.tol_residual;
  out->fd_step = cfg.fd_step;
  out->clamp = cfg.clamp ? 1 : 0;
  out->seed = cfg.seed;
  out->record_trajectory = cfg.record_trajectory ? 1 : 0;
}

srl_status srl_random_initial(size_t m, uint64_t seed, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto x = srl::random_initial(m, seed);
    std::copy(x.begin(), x.end(), out);
  });
}

srl_status srl_solve(const srl_system* s, const double* x0,
                     const srl_solver_config* cfg, srl_result** out) {
  return guarded([&] {
    require(s, "system");
    require(cfg, "config");
    require(out, "out");
    srl::SolverConfig c;
    c.method = to_cpp(cfg->method);
    c.k = cfg->k;
    c.max_iters = static_cast<long>(cfg->max_iters);
    c.tol_step = cfg->tol_step;
    c.tol_residual = cfg->tol_residual;
    c.fd_step = cfg->fd_step;
    c.clamp = cfg->clamp != 0;
    c.seed = cfg->seed;
    c.record_trajectory = cfg->record_trajectory != 0;
    std::optional<srl::TruthVector> start;
    if (x0) start = truth_vector(s, x0);
    *out = new srl_result{srl::solve(s->value, start, c)};
  });
}

void srl_result_free(srl_result* r) { delete r; }

srl_solve_status srl_result_status(const srl_result* r) {
  return r ? static_cast<srl_solve_status>(static_cast<int>(r->value.status))
           : SRL_SOLVE_DIVERGED;
}

int64_t srl_result_iterations(const srl_result* r) {
  return r ? r->value.iterations : 0;
}

double srl_result_inconsistency(const srl_result* r) { return r ? r->value.j : 0.0; }

size_t srl_result_dimension(const srl_result* r) { return r ? r->value.x.size() : 0; }

void srl_result_x(const srl_result* r, double* out) {
  if (r && out) std::copy(r->value.x.begin(), r->value.x.end(), out);
}

int srl_result_existence_warning(const srl_result* r) {
  return r && r->value.existence_warning ? 1 : 0;
}

size_t srl_result_trajectory_length(const srl_result* r) {
  return r && r->value.trajectory ? r->value.trajectory->size() : 0;
}

srl_status srl_result_trajectory_point(const srl_result* r, size_t index, int64_t* t,
                                       double* x, double* j) {
  return guarded([&] {
    require(r, "result");
    if (!r->value.trajectory || index >= r->value.trajectory->size())
      throw srl::InvalidArgument("trajectory index out of range");
    const auto& p = r->value.trajectory->points()[index];
    if (t) *t = p.t;
    if (x) std::copy(p.x.begin(), p.x.end(), x);
    if (j) *j = p.j;
  });
}

srl_status srl_polish(const srl_system* s, double* x, int64_t steps, double k) {
  return guarded([&] {
    require(s, "system");
    const auto polished = srl::polish(s->value, truth_vector(s, x),
                                      static_cast<long>(steps), k);
    std::copy(polished.begin(), polished.end(), x);
  });
}

double srl_default_threshold(const srl_system* s, double resolution) {
  if (!s) return 0.0;
  return srl::default_threshold(s->value, resolution);
}

srl_status srl_oracle_grid(const srl_system* s, double resolution, double threshold,
                           int polish, srl_solution_set** out) {
  return guarded([&] {
    require(s, "system");
    require(out, "out");
    srl::OracleOptions opts;
    opts.polish = polish != 0;
    *out = new srl_solution_set{
        srl::grid_solutions(s->value, resolution, threshold, opts),
        s->value.dimension()};
  });
}

void srl_solution_set_free(srl_solution_set* set) { delete set; }

double srl_solution_set_resolution(const srl_solution_set* set) {
  return set ? set->value.resolution : 0.0;
}

double srl_solution_set_threshold(const srl_solution_set* set) {
  return set ? set->value.threshold : 0.0;
}

size_t srl_solution_set_count(const srl_solution_set* set) {
  return set ? set->value.clusters.size() : 0;
}

srl_status srl_solution_set_cluster(const srl_solution_set* set, size_t index,
                                    double* representative, double* j, size_t* size,
                                    double* lo, double* hi) {
  return guarded([&] {
    require(set, "solution set");
    if (index >= set->value.clusters.size())
      throw srl::InvalidArgument("cluster index out of range");
    const auto& c = set->value.clusters[index];
    if (representative)
      std::copy(c.representative.begin(), c.representative.end(), representative);
    if (j) *j = c.j;
    if (size) *size = c.size;
    if (lo) std::copy(c.lo.begin(), c.lo.end(), lo);
    if (hi) std::copy(c.hi.begin(), c.hi.end(), hi);
  });
}

}  // extern "C"
