// Exercises the public C surface of libksat the way an external consumer
// would: through ksat/ksat.h only.

#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <ksat/ksat.h>

namespace {

struct Graph {
    ksat_graph* g = nullptr;
    ~Graph() { ksat_graph_free(g); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("graph lifecycle and errors") {
    Graph h;
    REQUIRE(ksat_graph_new(5, &h.g) == KSAT_OK);
    CHECK(ksat_graph_order(h.g) == 5);
    CHECK(ksat_graph_add_edge(h.g, 0, 1) == KSAT_OK);
    CHECK(ksat_graph_add_edge(h.g, 0, 1) == KSAT_OK);  // idempotent
    CHECK(ksat_graph_edge_count(h.g) == 1);
    CHECK(ksat_graph_has_edge(h.g, 1, 0) == 1);
    CHECK(ksat_graph_has_edge(h.g, 1, 2) == 0);
    CHECK(ksat_graph_degree(h.g, 0) == 1);
    CHECK(ksat_graph_neighbors(h.g, 0) == 0b10);

    CHECK(ksat_graph_add_edge(h.g, 2, 2) == KSAT_ERR_PARAM);
    CHECK(std::strlen(ksat_last_error()) > 0);
    CHECK(ksat_graph_add_edge(h.g, 0, 9) == KSAT_ERR_PARAM);
    CHECK(ksat_graph_has_edge(h.g, 0, 9) == -1);

    ksat_graph* bad = nullptr;
    CHECK(ksat_graph_new(65, &bad) == KSAT_ERR_PARAM);
    CHECK(ksat_graph_new(0, &bad) == KSAT_ERR_PARAM);
    CHECK(ksat_graph_new(3, nullptr) == KSAT_ERR_PARAM);

    Graph copy;
    REQUIRE(ksat_graph_copy(h.g, &copy.g) == KSAT_OK);
    CHECK(ksat_graph_edge_count(copy.g) == 1);
}

TEST_CASE("constructions, structure queries and graph6") {
    Graph pet;
    REQUIRE(ksat_construct(KSAT_FAMILY_PETERSEN, 0, 0, &pet.g) == KSAT_OK);
    CHECK(ksat_graph_order(pet.g) == 10);
    CHECK(ksat_graph_edge_count(pet.g) == 15);

    int girth = 0, diam = 0;
    CHECK(ksat_graph_girth(pet.g, &girth) == KSAT_OK);
    CHECK(girth == 5);
    CHECK(ksat_graph_diameter(pet.g, &diam) == KSAT_OK);
    CHECK(diam == 2);
    CHECK(ksat_graph_component_count(pet.g) == 1);
    CHECK(ksat_graph_component_of(pet.g, 3) == (1ull << 10) - 1);
    CHECK(ksat_graph_component_of(pet.g, 10) == 0);

    Graph split;
    REQUIRE(ksat_graph_new(4, &split.g) == KSAT_OK);
    REQUIRE(ksat_graph_add_edge(split.g, 0, 1) == KSAT_OK);
    REQUIRE(ksat_graph_add_edge(split.g, 2, 3) == KSAT_OK);
    CHECK(ksat_graph_component_count(split.g) == 2);
    CHECK(ksat_graph_component_of(split.g, 3) == 0b1100);
    CHECK(ksat_graph_diameter(split.g, &diam) == KSAT_OK);
    CHECK(diam == -1);

    int found = -1;
    int witness[4] = {-1, -1, -1, -1};
    CHECK(ksat_graph_contains_clique(pet.g, 3, &found, nullptr) == KSAT_OK);
    CHECK(found == 0);
    CHECK(ksat_graph_contains_clique(pet.g, 2, &found, witness) == KSAT_OK);
    CHECK(found == 1);
    CHECK(ksat_graph_has_edge(pet.g, witness[0], witness[1]) == 1);

    char buf[KSAT_G6_BUFSIZE];
    REQUIRE(ksat_graph_to_g6(pet.g, buf, sizeof buf) == KSAT_OK);
    Graph back;
    REQUIRE(ksat_graph_from_g6(buf, &back.g) == KSAT_OK);
    CHECK(ksat_graph_edge_count(back.g) == 15);

    char tiny[4];
    CHECK(ksat_graph_to_g6(pet.g, tiny, sizeof tiny) == KSAT_ERR_BUFFER);

    Graph parsed;
    CHECK(ksat_graph_from_g6("not graph6 at all", &parsed.g) == KSAT_ERR_PARSE);

    // Canonical keys are relabeling-invariant: compare two labelings of C5.
    Graph c5;
    REQUIRE(ksat_construct(KSAT_FAMILY_C5, 0, 0, &c5.g) == KSAT_OK);
    Graph c5b;
    REQUIRE(ksat_graph_new(5, &c5b.g) == KSAT_OK);
    int cyc[5] = {2, 0, 3, 1, 4};
    for (int i = 0; i < 5; ++i) REQUIRE(ksat_graph_add_edge(c5b.g, cyc[i], cyc[(i + 1) % 5]) == KSAT_OK);
    char a[KSAT_G6_BUFSIZE], b[KSAT_G6_BUFSIZE];
    REQUIRE(ksat_graph_canonical_g6(c5.g, a, sizeof a) == KSAT_OK);
    REQUIRE(ksat_graph_canonical_g6(c5b.g, b, sizeof b) == KSAT_OK);
    CHECK(std::string(a) == b);

    Graph s73;
    REQUIRE(ksat_construct(KSAT_FAMILY_S, 7, 3, &s73.g) == KSAT_OK);
    CHECK(ksat_graph_edge_count(s73.g) == 11);
    CHECK(ksat_construct(KSAT_FAMILY_S, 3, 3, &s73.g) == KSAT_ERR_PARAM);
}

TEST_CASE("saturation checks through the C API") {
    Graph c5;
    REQUIRE(ksat_construct(KSAT_FAMILY_C5, 0, 0, &c5.g) == KSAT_OK);

    ksat_certificate* cert = nullptr;
    REQUIRE(ksat_saturation_check(c5.g, 2, &cert) == KSAT_OK);
    CHECK(ksat_certificate_verdict(cert) == KSAT_SATURATED);
    CHECK(ksat_certificate_witness_count(cert) == 5);
    int x = -1, y = -1, clique[1] = {-1};
    REQUIRE(ksat_certificate_witness(cert, 0, &x, &y, clique) == KSAT_OK);
    CHECK(ksat_graph_has_edge(c5.g, x, y) == 0);
    CHECK(ksat_graph_has_edge(c5.g, x, clique[0]) == 1);
    CHECK(ksat_graph_has_edge(c5.g, y, clique[0]) == 1);
    CHECK(ksat_certificate_witness(cert, 99, &x, &y, nullptr) == KSAT_ERR_PARAM);
    ksat_certificate_free(cert);

    // P4: not maximal, failure names the endpoints.
    Graph p4;
    REQUIRE(ksat_graph_new(4, &p4.g) == KSAT_OK);
    for (int i = 0; i < 3; ++i) REQUIRE(ksat_graph_add_edge(p4.g, i, i + 1) == KSAT_OK);
    REQUIRE(ksat_saturation_check(p4.g, 2, &cert) == KSAT_OK);
    CHECK(ksat_certificate_verdict(cert) == KSAT_NOT_MAXIMAL);
    int failure[2] = {-1, -1};
    int len = 0;
    REQUIRE(ksat_certificate_failure(cert, failure, 2, &len) == KSAT_OK);
    CHECK(len == 2);
    CHECK(failure[0] == 0);
    CHECK(failure[1] == 3);
    ksat_certificate_free(cert);

    long fv = -1;
    CHECK(ksat_apex_pair_count(c5.g, 0, 2, &fv) == KSAT_OK);
    CHECK(fv == 1);

    long lhs = 0, rhs = 0, min_apexes = 0;
    int holds = 0;
    long apexes[5];
    REQUIRE(ksat_apex_sum_check(c5.g, 2, &lhs, &rhs, &holds, &min_apexes, apexes, 5) == KSAT_OK);
    CHECK(lhs == 5);
    CHECK(rhs == 5);
    CHECK(holds == 1);
    CHECK(min_apexes == 1);
    for (long a : apexes) CHECK(a == 1);
    CHECK(ksat_apex_sum_check(c5.g, 2, &lhs, &rhs, &holds, nullptr, apexes, 2) ==
          KSAT_ERR_BUFFER);
    CHECK(ksat_apex_sum_check(p4.g, 2, &lhs, &rhs, &holds, nullptr, nullptr, 0) ==
          KSAT_ERR_NOT_SATURATED);

    long count = 0, cap = 0;
    REQUIRE(ksat_apex_cap_check(c5.g, 0, 2, &count, &cap, &holds) == KSAT_OK);
    CHECK(count == 1);
    CHECK(cap == 1);
    CHECK(holds == 1);

    long adjacent = -1, inert = -1, completable = -1;
    REQUIRE(ksat_neighborhood_pair_split(c5.g, 0, 2, &adjacent, &inert, &completable) == KSAT_OK);
    CHECK(adjacent == 0);
    CHECK(inert == 0);
    CHECK(completable == 1);
}

TEST_CASE("spectral functions through the C API") {
    Graph pet;
    REQUIRE(ksat_construct(KSAT_FAMILY_PETERSEN, 0, 0, &pet.g) == KSAT_OK);

    double rho = 0;
    ksat_spectral_method method;
    REQUIRE(ksat_spectral_radius(pet.g, &rho, &method) == KSAT_OK);
    CHECK(std::abs(rho - 3.0) <= 1e-9);

    double values[10];
    int count = 0;
    double residual = 1;
    REQUIRE(ksat_full_spectrum(pet.g, values, 10, &count, &residual) == KSAT_OK);
    CHECK(count == 10);
    CHECK(std::abs(values[0] - 3.0) <= 1e-9);
    CHECK(std::abs(values[9] + 2.0) <= 1e-9);
    CHECK(residual < 1e-12);
    CHECK(ksat_full_spectrum(pet.g, values, 5, &count, nullptr) == KSAT_ERR_BUFFER);

    double bound = 0;
    REQUIRE(ksat_rayleigh_degree_bound(pet.g, &bound) == KSAT_OK);
    CHECK(std::abs(bound - 3.0) <= 1e-12);

    // Hub/leaf quotient of s_graph(7, 3).
    Graph s73;
    REQUIRE(ksat_construct(KSAT_FAMILY_S, 7, 3, &s73.g) == KSAT_OK);
    int cells[7] = {0, 0, 1, 1, 1, 1, 1};
    double q[4];
    int equitable = 0;
    double rho_q = 0;
    REQUIRE(ksat_quotient_matrix(s73.g, cells, 2, q, &equitable, &rho_q) == KSAT_OK);
    CHECK(equitable == 1);
    CHECK(q[0] == 1.0);
    CHECK(q[1] == 5.0);
    CHECK(q[2] == 2.0);
    CHECK(q[3] == 0.0);
    double closed = 0;
    REQUIRE(ksat_s_graph_spectral_radius(7, 3, &closed) == KSAT_OK);
    CHECK(std::abs(rho_q - closed) <= 1e-12);

    int bad_cells[7] = {0, 0, 0, 0, 0, 0, 2};
    CHECK(ksat_quotient_matrix(s73.g, bad_cells, 3, nullptr, &equitable, nullptr) ==
          KSAT_ERR_PARAM);

    Graph c5;
    REQUIRE(ksat_construct(KSAT_FAMILY_C5, 0, 0, &c5.g) == KSAT_OK);
    double lambda_min = 0, lambda_bound = 0;
    int holds = 0;
    REQUIRE(ksat_lambda_min_check(c5.g, 2, &lambda_min, &lambda_bound, &holds) == KSAT_OK);
    CHECK(std::abs(lambda_min + (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-9);
    CHECK(std::abs(lambda_bound + 0.8) <= 1e-12);
    CHECK(holds == 1);
}

TEST_CASE("bounds through the C API") {
    long v = 0;
    REQUIRE(ksat_sat_number(5, 2, &v) == KSAT_OK);
    CHECK(v == 4);
    REQUIRE(ksat_ex_number(5, 2, &v) == KSAT_OK);
    CHECK(v == 6);
    REQUIRE(ksat_degree_square_lower_bound(10, 2, &v) == KSAT_OK);
    CHECK(v == 90);
    REQUIRE(ksat_shifted_degree_lower_bound(10, 2, &v) == KSAT_OK);
    CHECK(v == 80);
    double d = 0;
    REQUIRE(ksat_spectral_lower_bound(50, 2, &d) == KSAT_OK);
    CHECK(std::abs(d - 7.0) <= 1e-12);
    CHECK(ksat_sat_number(5, 9, &v) == KSAT_ERR_PARAM);

    Graph pet;
    REQUIRE(ksat_construct(KSAT_FAMILY_PETERSEN, 0, 0, &pet.g) == KSAT_OK);
    ksat_bounds_report rep;
    REQUIRE(ksat_verify_graph(pet.g, 2, 0, &rep) == KSAT_OK);
    CHECK(rep.sum_d2 == 90);
    CHECK(rep.sum_d2_equal == 1);
    CHECK(rep.rho_lower_equal == 1);
    CHECK(rep.all_hold == 1);

    Graph k4;
    REQUIRE(ksat_construct(KSAT_FAMILY_TURAN, 4, 4, &k4.g) == KSAT_OK);
    CHECK(ksat_verify_graph(k4.g, 2, 0, &rep) == KSAT_ERR_NOT_SATURATED);
}

TEST_CASE("census through the C API") {
    ksat_census_options opt{};
    opt.workers = 2;
    ksat_census* raw = nullptr;
    REQUIRE(ksat_census_run(5, 2, &opt, &raw) == KSAT_OK);
    CHECK(ksat_census_count(raw) == 3);

    ksat_census_summary sum{};
    REQUIRE(ksat_census_summary_get(raw, &sum) == KSAT_OK);
    CHECK(sum.min_edges == 4);
    CHECK(sum.max_edges == 6);
    CHECK(std::abs(sum.min_rho - 2.0) <= 1e-9);
    CHECK(sum.sum_d2_attainers == 2);
    CHECK(sum.min_rho_attainers == 2);
    CHECK(sum.s_graph_attains_min_rho == 1);
    CHECK(sum.s_graph_index >= 0);

    long idx[8];
    long len = 0;
    REQUIRE(ksat_census_attainers(raw, KSAT_ATTAINER_MIN_RHO, idx, 8, &len) == KSAT_OK);
    CHECK(len == 2);
    char buf[KSAT_G6_BUFSIZE];
    for (long i = 0; i < len; ++i)
        CHECK(ksat_census_member_g6(raw, idx[i], buf, sizeof buf) == KSAT_OK);

    long edges = 0, sum_d2 = 0;
    double rho = 0;
    int tight = 0;
    REQUIRE(ksat_census_member_stats(raw, 0, &edges, &sum_d2, &rho, &tight) == KSAT_OK);
    CHECK(edges >= 4);

    ksat_graph* member = nullptr;
    REQUIRE(ksat_census_member_graph(raw, 0, &member) == KSAT_OK);
    CHECK(ksat_graph_order(member) == 5);
    ksat_graph_free(member);

    CHECK(ksat_census_member_g6(raw, 17, buf, sizeof buf) == KSAT_ERR_PARAM);
    ksat_census_free(raw);

    ksat_census* blocked = nullptr;
    CHECK(ksat_census_run(8, 2, nullptr, &blocked) == KSAT_ERR_PARAM);
    CHECK(ksat_census_run(5, 1, nullptr, &blocked) == KSAT_ERR_PARAM);
}

TEST_CASE("status names") {
    CHECK(std::string(ksat_status_name(KSAT_OK)) == "ok");
    CHECK(std::string(ksat_status_name(KSAT_ERR_PARSE)) == "parse error");
    CHECK(std::string(ksat_status_name(KSAT_ERR_BUFFER)) == "buffer too small");
}

}  // TEST_SUITE
