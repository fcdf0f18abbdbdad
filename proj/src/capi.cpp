#include "ksat/ksat.h"

#include <cstring>
#include <new>
#include <string>

#include "bounds.hpp"
#include "canonical.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "saturation.hpp"
#include "search.hpp"
#include "spectral.hpp"

// The opaque handle types wrap the C++ values one-to-one; every entry point
// funnels through guarded() below, which translates exceptions into status
// codes and stashes the message in a thread-local slot.

struct ksat_graph {
    ksat::Graph g;
};

struct ksat_certificate {
    ksat::SaturationCertificate cert;
    int r;
};

struct ksat_census {
    ksat::SearchCensus census;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* what) { t_last_error = what == nullptr ? "" : what; }

template <typename F>
ksat_status guarded(F&& body) {
    try {
        set_error("");
        return body();
    } catch (const ksat::ParseError& e) {
        set_error(e.what());
        return KSAT_ERR_PARSE;
    } catch (const ksat::NotSaturatedError& e) {
        set_error(e.what());
        return KSAT_ERR_NOT_SATURATED;
    } catch (const ksat::NumericError& e) {
        set_error(e.what());
        return KSAT_ERR_NUMERIC;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return KSAT_ERR_PARAM;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return KSAT_ERR_PARAM;
    } catch (const std::bad_alloc& e) {
        set_error(e.what());
        return KSAT_ERR_LIMIT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return KSAT_ERR_PARAM;
    }
}

ksat_status require(bool ok, const char* message) {
    if (ok) return KSAT_OK;
    set_error(message);
    return KSAT_ERR_PARAM;
}

ksat_status write_string(const std::string& text, char* buf, size_t bufsize) {
    if (buf == nullptr || bufsize < text.size() + 1) {
        set_error("output buffer too small");
        return KSAT_ERR_BUFFER;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return KSAT_OK;
}

}  // namespace

extern "C" {

const char* ksat_status_name(ksat_status s) {
    switch (s) {
        case KSAT_OK: return "ok";
        case KSAT_ERR_PARAM: return "invalid parameter";
        case KSAT_ERR_PARSE: return "parse error";
        case KSAT_ERR_NOT_SATURATED: return "input not saturated";
        case KSAT_ERR_LIMIT: return "size limit exceeded";
        case KSAT_ERR_NUMERIC: return "numerical failure";
        case KSAT_ERR_BUFFER: return "buffer too small";
    }
    return "unknown status";
}

const char* ksat_last_error(void) { return t_last_error.c_str(); }

/* ---------------------------------------------------------------- graphs */

ksat_status ksat_graph_new(int n, ksat_graph** out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = new ksat_graph{ksat::Graph(n)};
        return KSAT_OK;
    });
}

ksat_status ksat_graph_copy(const ksat_graph* g, ksat_graph** out) {
    if (require(g != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = new ksat_graph{g->g};
        return KSAT_OK;
    });
}

void ksat_graph_free(ksat_graph* g) { delete g; }

ksat_status ksat_graph_add_edge(ksat_graph* g, int u, int v) {
    if (require(g != nullptr, "graph handle is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        g->g.add_edge(u, v);
        return KSAT_OK;
    });
}

int ksat_graph_order(const ksat_graph* g) { return g == nullptr ? 0 : g->g.order(); }

long ksat_graph_edge_count(const ksat_graph* g) { return g == nullptr ? 0 : g->g.edge_count(); }

long ksat_graph_non_edge_count(const ksat_graph* g) {
    return g == nullptr ? 0 : g->g.non_edge_count();
}

int ksat_graph_has_edge(const ksat_graph* g, int u, int v) {
    if (g == nullptr) return -1;
    int result = -1;
    guarded([&] {
        result = g->g.has_edge(u, v) ? 1 : 0;
        return KSAT_OK;
    });
    return result;
}

int ksat_graph_degree(const ksat_graph* g, int v) {
    if (g == nullptr) return -1;
    int result = -1;
    guarded([&] {
        result = g->g.degree(v);
        return KSAT_OK;
    });
    return result;
}

uint64_t ksat_graph_neighbors(const ksat_graph* g, int v) {
    if (g == nullptr) return 0;
    uint64_t result = 0;
    guarded([&] {
        result = g->g.neighbors(v);
        return KSAT_OK;
    });
    return result;
}

ksat_status ksat_graph_girth(const ksat_graph* g, int* out) {
    if (require(g != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::girth(g->g).value_or(0);
        return KSAT_OK;
    });
}

ksat_status ksat_graph_diameter(const ksat_graph* g, int* out) {
    if (require(g != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::diameter(g->g).value_or(-1);
        return KSAT_OK;
    });
}

int ksat_graph_component_count(const ksat_graph* g) {
    return g == nullptr ? 0 : static_cast<int>(ksat::components(g->g).size());
}

uint64_t ksat_graph_component_of(const ksat_graph* g, int v) {
    if (g == nullptr || v < 0 || v >= g->g.order()) return 0;
    for (std::uint64_t comp : ksat::components(g->g))
        if (comp & ksat::bit(v)) return comp;
    return 0;
}

ksat_status ksat_graph_contains_clique(const ksat_graph* g, int k, int* found, int* witness) {
    if (require(g != nullptr && found != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        if (witness == nullptr) {
            *found = ksat::contains_clique(g->g, k) ? 1 : 0;
        } else {
            auto clique = ksat::find_clique(g->g, k);
            *found = clique.has_value() ? 1 : 0;
            if (clique)
                for (std::size_t i = 0; i < clique->size(); ++i)
                    witness[i] = (*clique)[i];
        }
        return KSAT_OK;
    });
}

ksat_status ksat_graph_from_g6(const char* text, ksat_graph** out) {
    if (require(text != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = new ksat_graph{ksat::parse_graph6(text)};
        return KSAT_OK;
    });
}

ksat_status ksat_graph_to_g6(const ksat_graph* g, char* buf, size_t bufsize) {
    if (require(g != nullptr, "graph handle is null")) return KSAT_ERR_PARAM;
    return guarded([&] { return write_string(ksat::to_graph6(g->g), buf, bufsize); });
}

ksat_status ksat_graph_canonical_g6(const ksat_graph* g, char* buf, size_t bufsize) {
    if (require(g != nullptr, "graph handle is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        return write_string(ksat::to_graph6(ksat::canonical_graph(g->g)), buf, bufsize);
    });
}

/* ---------------------------------------------------------- constructions */

ksat_status ksat_construct(ksat_family family, int n, int r, ksat_graph** out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        switch (family) {
            case KSAT_FAMILY_S: *out = new ksat_graph{ksat::s_graph(n, r)}; return KSAT_OK;
            case KSAT_FAMILY_TURAN: *out = new ksat_graph{ksat::turan_graph(n, r)}; return KSAT_OK;
            case KSAT_FAMILY_C5:
                *out = new ksat_graph{ksat::moore_graph(ksat::MooreGraphTag::C5)};
                return KSAT_OK;
            case KSAT_FAMILY_PETERSEN:
                *out = new ksat_graph{ksat::moore_graph(ksat::MooreGraphTag::Petersen)};
                return KSAT_OK;
            case KSAT_FAMILY_HOFFMAN_SINGLETON:
                *out = new ksat_graph{ksat::moore_graph(ksat::MooreGraphTag::HoffmanSingleton)};
                return KSAT_OK;
        }
        set_error("unknown family tag");
        return KSAT_ERR_PARAM;
    });
}

/* ------------------------------------------------------------- saturation */

ksat_status ksat_saturation_check(const ksat_graph* g, int r, ksat_certificate** out) {
    if (require(g != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = new ksat_certificate{ksat::check_saturation(g->g, r), r};
        return KSAT_OK;
    });
}

ksat_verdict ksat_certificate_verdict(const ksat_certificate* c) {
    if (c == nullptr) return KSAT_NOT_MAXIMAL;
    switch (c->cert.verdict) {
        case ksat::Verdict::Saturated: return KSAT_SATURATED;
        case ksat::Verdict::NotFree: return KSAT_NOT_FREE;
        case ksat::Verdict::NotMaximal: return KSAT_NOT_MAXIMAL;
    }
    return KSAT_NOT_MAXIMAL;
}

ksat_status ksat_certificate_failure(const ksat_certificate* c, int* buf, int cap, int* len) {
    if (require(c != nullptr && len != nullptr, "null argument")) return KSAT_ERR_PARAM;
    switch (c->cert.verdict) {
        case ksat::Verdict::Saturated: *len = 0; return KSAT_OK;
        case ksat::Verdict::NotFree: {
            int need = static_cast<int>(c->cert.clique.size());
            *len = need;
            if (buf == nullptr) return KSAT_OK;
            if (cap < need) {
                set_error("failure buffer too small");
                return KSAT_ERR_BUFFER;
            }
            for (int i = 0; i < need; ++i) buf[i] = c->cert.clique[i];
            return KSAT_OK;
        }
        case ksat::Verdict::NotMaximal: {
            *len = 2;
            if (buf == nullptr) return KSAT_OK;
            if (cap < 2) {
                set_error("failure buffer too small");
                return KSAT_ERR_BUFFER;
            }
            buf[0] = c->cert.non_edge.first;
            buf[1] = c->cert.non_edge.second;
            return KSAT_OK;
        }
    }
    return KSAT_ERR_PARAM;
}

long ksat_certificate_witness_count(const ksat_certificate* c) {
    return c == nullptr ? 0 : static_cast<long>(c->cert.witnesses.size());
}

ksat_status ksat_certificate_witness(const ksat_certificate* c, long idx, int* x, int* y,
                                     int* clique) {
    if (require(c != nullptr && x != nullptr && y != nullptr, "null argument"))
        return KSAT_ERR_PARAM;
    if (idx < 0 || idx >= static_cast<long>(c->cert.witnesses.size())) {
        set_error("witness index out of range");
        return KSAT_ERR_PARAM;
    }
    const auto& w = c->cert.witnesses[idx];
    *x = w.x;
    *y = w.y;
    if (clique != nullptr)
        for (std::size_t i = 0; i < w.clique.size(); ++i) clique[i] = w.clique[i];
    return KSAT_OK;
}

void ksat_certificate_free(ksat_certificate* c) { delete c; }

ksat_status ksat_apex_pair_count(const ksat_graph* g, int v, int r, long* out) {
    if (require(g != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::apex_pair_count(g->g, v, r);
        return KSAT_OK;
    });
}

ksat_status ksat_apex_sum_check(const ksat_graph* g, int r, long* lhs, long* rhs, int* holds,
                                long* min_apexes, long* apexes, long apexes_cap) {
    if (require(g != nullptr && lhs != nullptr && rhs != nullptr && holds != nullptr,
                "null argument"))
        return KSAT_ERR_PARAM;
    return guarded([&] {
        ksat::ApexSumReport rep = ksat::apex_sum_check(g->g, r);
        *lhs = rep.lhs;
        *rhs = rep.rhs;
        *holds = rep.holds ? 1 : 0;
        if (min_apexes != nullptr) *min_apexes = rep.min_apexes;
        if (apexes != nullptr) {
            if (apexes_cap < static_cast<long>(rep.per_non_edge.size())) {
                set_error("apex buffer too small");
                return KSAT_ERR_BUFFER;
            }
            for (std::size_t i = 0; i < rep.per_non_edge.size(); ++i)
                apexes[i] = rep.per_non_edge[i].apexes;
        }
        return KSAT_OK;
    });
}

ksat_status ksat_apex_cap_check(const ksat_graph* g, int v, int r, long* count, long* cap,
                                int* holds) {
    if (require(g != nullptr && count != nullptr && cap != nullptr && holds != nullptr,
                "null argument"))
        return KSAT_ERR_PARAM;
    return guarded([&] {
        ksat::ApexCapReport rep = ksat::apex_cap_check(g->g, v, r);
        *count = rep.count;
        *cap = rep.cap;
        *holds = rep.holds ? 1 : 0;
        return KSAT_OK;
    });
}

ksat_status ksat_neighborhood_pair_split(const ksat_graph* g, int v, int r, long* adjacent,
                                         long* inert, long* completable) {
    if (require(g != nullptr && adjacent != nullptr && inert != nullptr && completable != nullptr,
                "null argument"))
        return KSAT_ERR_PARAM;
    return guarded([&] {
        ksat::NeighborhoodPairSplit split = ksat::neighborhood_pair_split(g->g, v, r);
        *adjacent = split.adjacent;
        *inert = split.inert;
        *completable = split.completable;
        return KSAT_OK;
    });
}

/* --------------------------------------------------------------- spectral */

ksat_status ksat_spectral_radius(const ksat_graph* g, double* rho, ksat_spectral_method* method) {
    if (require(g != nullptr && rho != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        ksat::RadiusResult result = ksat::spectral_radius_detail(g->g);
        *rho = result.value;
        if (method != nullptr)
            *method = result.method == ksat::SpectralMethod::PowerIteration
                          ? KSAT_METHOD_POWER_ITERATION
                          : KSAT_METHOD_FULL_SOLVER;
        return KSAT_OK;
    });
}

ksat_status ksat_full_spectrum(const ksat_graph* g, double* values, int cap, int* count,
                               double* residual) {
    if (require(g != nullptr && values != nullptr && count != nullptr, "null argument"))
        return KSAT_ERR_PARAM;
    return guarded([&] {
        if (cap < g->g.order()) {
            set_error("spectrum buffer too small");
            return KSAT_ERR_BUFFER;
        }
        ksat::Spectrum sp = ksat::full_spectrum(g->g);
        *count = static_cast<int>(sp.values.size());
        for (std::size_t i = 0; i < sp.values.size(); ++i) values[i] = sp.values[i];
        if (residual != nullptr) *residual = sp.residual;
        return KSAT_OK;
    });
}

ksat_status ksat_rayleigh_degree_bound(const ksat_graph* g, double* out) {
    if (require(g != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::rayleigh_degree_bound(g->g);
        return KSAT_OK;
    });
}

ksat_status ksat_quotient_matrix(const ksat_graph* g, const int* cell_of, int s, double* q,
                                 int* equitable, double* rho_q) {
    if (require(g != nullptr && cell_of != nullptr && s >= 1, "null argument or bad cell count"))
        return KSAT_ERR_PARAM;
    return guarded([&] {
        std::vector<int> cells(cell_of, cell_of + g->g.order());
        for (int c : cells)
            if (c >= s) {
                set_error("cell id exceeds the declared cell count");
                return KSAT_ERR_PARAM;
            }
        ksat::QuotientMatrix qm = ksat::quotient_matrix(g->g, cells);
        if (qm.cells != s) {
            set_error("every cell of the partition must be nonempty");
            return KSAT_ERR_PARAM;
        }
        if (q != nullptr)
            for (std::size_t i = 0; i < qm.value.size(); ++i) q[i] = qm.value[i];
        if (equitable != nullptr) *equitable = qm.equitable ? 1 : 0;
        if (rho_q != nullptr) *rho_q = ksat::quotient_spectral_radius(qm);
        return KSAT_OK;
    });
}

ksat_status ksat_s_graph_spectral_radius(int n, int r, double* out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::s_graph_spectral_radius(n, r);
        return KSAT_OK;
    });
}

ksat_status ksat_lambda_min_check(const ksat_graph* g, int r, double* lambda_min, double* bound,
                                  int* holds) {
    if (require(g != nullptr && lambda_min != nullptr && bound != nullptr && holds != nullptr,
                "null argument"))
        return KSAT_ERR_PARAM;
    return guarded([&] {
        ksat::LambdaMinReport rep = ksat::lambda_min_check(g->g, r);
        *lambda_min = rep.lambda_min;
        *bound = rep.bound;
        *holds = rep.holds ? 1 : 0;
        return KSAT_OK;
    });
}

/* ----------------------------------------------------------------- bounds */

ksat_status ksat_sat_number(int n, int r, long* out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::sat_number(n, r);
        return KSAT_OK;
    });
}

ksat_status ksat_ex_number(int n, int r, long* out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::ex_number(n, r);
        return KSAT_OK;
    });
}

ksat_status ksat_degree_square_lower_bound(int n, int r, long* out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::degree_square_lower_bound(n, r);
        return KSAT_OK;
    });
}

ksat_status ksat_shifted_degree_lower_bound(int n, int r, long* out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::shifted_degree_lower_bound(n, r);
        return KSAT_OK;
    });
}

ksat_status ksat_spectral_lower_bound(int n, int r, double* out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        *out = ksat::spectral_lower_bound(n, r);
        return KSAT_OK;
    });
}

ksat_status ksat_verify_graph(const ksat_graph* g, int r, double spectral_tol,
                              ksat_bounds_report* out) {
    if (require(g != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    return guarded([&] {
        double tol = spectral_tol <= 0 ? 1e-9 : spectral_tol;
        ksat::BoundsReport rep = ksat::verify_graph(g->g, r, tol);
        *out = ksat_bounds_report{rep.n,
                                  rep.r,
                                  rep.edges,
                                  rep.sum_d2,
                                  rep.sum_d2_bound,
                                  rep.sum_d2_slack,
                                  rep.sum_d2_equal ? 1 : 0,
                                  rep.shifted_sum,
                                  rep.shifted_bound,
                                  rep.shifted_slack,
                                  rep.shifted_equal ? 1 : 0,
                                  rep.rho,
                                  rep.rho_lower,
                                  rep.rho_lower_slack,
                                  rep.rho_lower_equal ? 1 : 0,
                                  rep.rho_turan,
                                  rep.rho_turan_slack,
                                  rep.rho_turan_equal ? 1 : 0,
                                  rep.sat_edges,
                                  rep.ex_edges,
                                  rep.all_hold ? 1 : 0};
        return KSAT_OK;
    });
}

/* ----------------------------------------------------------------- search */

ksat_status ksat_census_run(int n, int r, const ksat_census_options* opt, ksat_census** out) {
    if (require(out != nullptr, "out pointer is null")) return KSAT_ERR_PARAM;
    return guarded([&] {
        ksat::CensusOptions options;
        if (opt != nullptr) {
            options.workers = opt->workers;
            options.shard_bits = opt->shard_bits;
            options.allow_order_8 = opt->allow_order_8 != 0;
            if (opt->spectral_tol > 0) options.spectral_tol = opt->spectral_tol;
        }
        *out = new ksat_census{ksat::run_census(n, r, options)};
        return KSAT_OK;
    });
}

void ksat_census_free(ksat_census* c) { delete c; }

long ksat_census_count(const ksat_census* c) {
    return c == nullptr ? 0 : static_cast<long>(c->census.members.size());
}

ksat_status ksat_census_member_g6(const ksat_census* c, long idx, char* buf, size_t bufsize) {
    if (require(c != nullptr, "census handle is null")) return KSAT_ERR_PARAM;
    if (idx < 0 || idx >= ksat_census_count(c)) {
        set_error("census index out of range");
        return KSAT_ERR_PARAM;
    }
    return write_string(c->census.members[idx].g6, buf, bufsize);
}

ksat_status ksat_census_member_graph(const ksat_census* c, long idx, ksat_graph** out) {
    if (require(c != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    if (idx < 0 || idx >= ksat_census_count(c)) {
        set_error("census index out of range");
        return KSAT_ERR_PARAM;
    }
    return guarded([&] {
        *out = new ksat_graph{ksat::from_canonical(c->census.members[idx].form)};
        return KSAT_OK;
    });
}

ksat_status ksat_census_member_stats(const ksat_census* c, long idx, long* edges, long* sum_d2,
                                     double* rho, int* sum_d2_tight) {
    if (require(c != nullptr, "census handle is null")) return KSAT_ERR_PARAM;
    if (idx < 0 || idx >= ksat_census_count(c)) {
        set_error("census index out of range");
        return KSAT_ERR_PARAM;
    }
    const ksat::CensusMember& m = c->census.members[idx];
    if (edges != nullptr) *edges = m.edges;
    if (sum_d2 != nullptr) *sum_d2 = m.sum_d2;
    if (rho != nullptr) *rho = m.rho;
    if (sum_d2_tight != nullptr) *sum_d2_tight = m.sum_d2_tight ? 1 : 0;
    return KSAT_OK;
}

ksat_status ksat_census_summary_get(const ksat_census* c, ksat_census_summary* out) {
    if (require(c != nullptr && out != nullptr, "null argument")) return KSAT_ERR_PARAM;
    const ksat::SearchCensus& s = c->census;
    out->n = s.n;
    out->r = s.r;
    out->count = static_cast<long>(s.members.size());
    out->min_edges = s.min_edges;
    out->max_edges = s.max_edges;
    out->min_sum_d2 = s.min_sum_d2;
    out->min_rho = s.min_rho;
    out->min_edge_attainers = static_cast<long>(s.min_edge_attainers.size());
    out->sum_d2_attainers = static_cast<long>(s.sum_d2_attainers.size());
    out->min_sum_d2_attainers = static_cast<long>(s.min_sum_d2_attainers.size());
    out->min_rho_attainers = static_cast<long>(s.min_rho_attainers.size());
    out->s_graph_rho = s.s_graph_rho;
    out->rho_lower = s.rho_lower;
    out->s_graph_index = static_cast<long>(s.s_graph_index);
    out->s_graph_attains_min_rho = s.s_graph_attains_min_rho ? 1 : 0;
    return KSAT_OK;
}

ksat_status ksat_census_attainers(const ksat_census* c, ksat_attainer_kind kind, long* indices,
                                  long cap, long* len) {
    if (require(c != nullptr && len != nullptr, "null argument")) return KSAT_ERR_PARAM;
    const std::vector<std::size_t>* list = nullptr;
    switch (kind) {
        case KSAT_ATTAINER_MIN_EDGES: list = &c->census.min_edge_attainers; break;
        case KSAT_ATTAINER_SUM_D2_BOUND: list = &c->census.sum_d2_attainers; break;
        case KSAT_ATTAINER_MIN_SUM_D2: list = &c->census.min_sum_d2_attainers; break;
        case KSAT_ATTAINER_MIN_RHO: list = &c->census.min_rho_attainers; break;
    }
    if (list == nullptr) {
        set_error("unknown attainer kind");
        return KSAT_ERR_PARAM;
    }
    *len = static_cast<long>(list->size());
    if (indices == nullptr) return KSAT_OK;
    if (cap < *len) {
        set_error("attainer buffer too small");
        return KSAT_ERR_BUFFER;
    }
    for (std::size_t i = 0; i < list->size(); ++i) indices[i] = static_cast<long>((*list)[i]);
    return KSAT_OK;
}

} /* extern "C" */
