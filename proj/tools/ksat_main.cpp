// ksat command-line front end: construct / check / bounds / spectrum / search
// over graph6 streams.  Talks to the library exclusively through the public
// C API in ksat/ksat.h.
//
// Exit codes: 0 success, 1 a checked bound failed to hold (a genuine
// finding), 2 usage or input error.

#include <ksat/ksat.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
    void operator()(ksat_graph* g) const { ksat_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ksat_graph, GraphDeleter>;

struct CertDeleter {
    void operator()(ksat_certificate* c) const { ksat_certificate_free(c); }
};
using CertPtr = std::unique_ptr<ksat_certificate, CertDeleter>;

struct CensusDeleter {
    void operator()(ksat_census* c) const { ksat_census_free(c); }
};
using CensusPtr = std::unique_ptr<ksat_census, CensusDeleter>;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

[[noreturn]] void die_usage(const std::string& message) {
    std::cerr << "ksat: " << message << "\n";
    std::exit(kExitUsage);
}

void check_status(ksat_status st, const std::string& context) {
    if (st == KSAT_OK) return;
    die_usage(context + ": " + ksat_status_name(st) +
              (std::strlen(ksat_last_error()) ? std::string(" (") + ksat_last_error() + ")" : ""));
}

std::string graph_g6(const ksat_graph* g) {
    char buf[KSAT_G6_BUFSIZE];
    check_status(ksat_graph_to_g6(g, buf, sizeof buf), "graph6 emission failed");
    return buf;
}

// Applies fn to each graph of a newline-delimited graph6 stream; parse
// failures abort with the offending line number.
template <typename Fn>
void for_each_input_graph(const std::string& path, Fn&& fn) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) die_usage("cannot open input file: " + path);
        in = &file;
    }
    std::string line;
    long line_no = 0, index = 0;
    while (std::getline(*in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ksat_graph* raw = nullptr;
        ksat_status st = ksat_graph_from_g6(line.c_str(), &raw);
        if (st != KSAT_OK) {
            std::cerr << "ksat: line " << line_no << ": " << ksat_status_name(st) << " ("
                      << ksat_last_error() << ")\n";
            std::exit(kExitUsage);
        }
        GraphPtr g(raw);
        fn(index++, line_no, g.get());
    }
}

int resolve_workers(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("KSAT_WORKERS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1)
            die_usage(std::string("KSAT_WORKERS is not a positive integer: ") + env);
        return static_cast<int>(parsed);
    }
    return 0;  // library default: hardware concurrency
}

/* ------------------------------------------------------------- construct */

int run_construct(const std::string& family, int n, int r, const std::string& out_path) {
    ksat_family tag;
    if (family == "s") tag = KSAT_FAMILY_S;
    else if (family == "turan") tag = KSAT_FAMILY_TURAN;
    else if (family == "c5") tag = KSAT_FAMILY_C5;
    else if (family == "petersen") tag = KSAT_FAMILY_PETERSEN;
    else if (family == "hoffman-singleton") tag = KSAT_FAMILY_HOFFMAN_SINGLETON;
    else die_usage("unknown family: " + family);

    if ((tag == KSAT_FAMILY_S || tag == KSAT_FAMILY_TURAN) && (n <= 0 || r <= 0))
        die_usage("--n and --r are required for family " + family);

    ksat_graph* raw = nullptr;
    check_status(ksat_construct(tag, n, r, &raw), "construction failed");
    GraphPtr g(raw);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) die_usage("cannot open output file: " + out_path);
        out = &file;
    }
    *out << graph_g6(g.get()) << "\n";
    return kExitOk;
}

/* ----------------------------------------------------------------- check */

int run_check(const std::string& input, int r, const std::string& format) {
    bool violation = false;
    if (format == "csv")
        std::cout << "index,graph6,n,r,m,verdict,failure,apex_lhs,apex_rhs,apex_min,caps_hold,"
                     "f_vector\n";

    for_each_input_graph(input, [&](long index, long line_no, ksat_graph* g) {
        ksat_certificate* raw = nullptr;
        ksat_status st = ksat_saturation_check(g, r, &raw);
        if (st != KSAT_OK) {
            std::cerr << "ksat: line " << line_no << ": " << ksat_last_error() << "\n";
            std::exit(kExitUsage);
        }
        CertPtr cert(raw);
        ksat_verdict verdict = ksat_certificate_verdict(cert.get());
        const int n = ksat_graph_order(g);
        const long m = ksat_graph_edge_count(g);

        int failure[KSAT_MAX_VERTICES];
        int failure_len = 0;
        check_status(ksat_certificate_failure(cert.get(), failure, KSAT_MAX_VERTICES, &failure_len),
                     "certificate failure readout");

        // Apex machinery is defined on K_{r+1}-free graphs.
        std::vector<long> f_vector, cap_vector;
        bool caps_hold = true;
        long lhs = 0, rhs = 0, min_apexes = 0;
        int sum_holds = 1;
        bool have_sum = false;
        if (verdict != KSAT_NOT_FREE) {
            for (int v = 0; v < n; ++v) {
                long fv = 0;
                check_status(ksat_apex_pair_count(g, v, r, &fv), "apex count");
                f_vector.push_back(fv);
                long count = 0, cap = 0;
                int holds = 0;
                check_status(ksat_apex_cap_check(g, v, r, &count, &cap, &holds), "apex cap");
                cap_vector.push_back(cap);
                caps_hold = caps_hold && holds != 0;
            }
        }
        if (verdict == KSAT_SATURATED) {
            check_status(ksat_apex_sum_check(g, r, &lhs, &rhs, &sum_holds, &min_apexes, nullptr, 0),
                         "apex sum check");
            have_sum = true;
            if (sum_holds == 0 || min_apexes < r - 1 || !caps_hold) violation = true;
        }

        const char* verdict_name = verdict == KSAT_SATURATED     ? "saturated"
                                   : verdict == KSAT_NOT_FREE    ? "not_free"
                                                                 : "not_maximal";
        auto join_ints = [](const int* v, int len) {
            std::string s;
            for (int i = 0; i < len; ++i) s += (i ? ";" : "") + std::to_string(v[i]);
            return s;
        };
        auto join_longs = [](const std::vector<long>& v, const char* sep) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
            return s;
        };

        if (format == "text") {
            std::cout << "graph " << index + 1 << " (n=" << n << ", m=" << m
                      << "): " << verdict_name << " for r=" << r << "\n";
            if (verdict == KSAT_NOT_FREE)
                std::cout << "  contains K_" << r + 1 << ": " << join_ints(failure, failure_len)
                          << "\n";
            if (verdict == KSAT_NOT_MAXIMAL)
                std::cout << "  uncompletable non-edge: {" << failure[0] << ", " << failure[1]
                          << "}\n";
            if (verdict != KSAT_NOT_FREE)
                std::cout << "  apex counts by vertex: " << join_longs(f_vector, " ") << "\n"
                          << "  per-vertex caps hold: " << (caps_hold ? "yes" : "no") << "\n";
            if (have_sum)
                std::cout << "  apex sum bound: (r-1)*non_edges = " << lhs << " <= " << rhs
                          << " = sum apexes"
                          << (lhs == rhs ? "  [equality]" : "") << "\n"
                          << "  min apexes over non-edges: " << min_apexes << " (needs >= "
                          << r - 1 << ")\n";
        } else if (format == "csv") {
            std::cout << index + 1 << ",\"" << graph_g6(g) << "\"," << n << "," << r << "," << m
                      << "," << verdict_name << "," << join_ints(failure, failure_len) << ",";
            if (have_sum)
                std::cout << lhs << "," << rhs << "," << min_apexes;
            else
                std::cout << ",,";
            std::cout << "," << (verdict != KSAT_NOT_FREE ? (caps_hold ? "1" : "0") : "") << ","
                      << join_longs(f_vector, ";") << "\n";
        } else {
            json rec{{"index", index + 1}, {"graph6", graph_g6(g)}, {"n", n},
                     {"r", r},             {"m", m},                {"verdict", verdict_name}};
            if (verdict == KSAT_NOT_FREE) rec["clique"] = std::vector<int>(failure, failure + failure_len);
            if (verdict == KSAT_NOT_MAXIMAL) rec["non_edge"] = {failure[0], failure[1]};
            if (verdict != KSAT_NOT_FREE) {
                rec["apex_counts"] = f_vector;
                rec["apex_caps"] = cap_vector;
                rec["caps_hold"] = caps_hold;
            }
            if (have_sum) {
                rec["apex_sum_lhs"] = lhs;
                rec["apex_sum_rhs"] = rhs;
                rec["min_apexes"] = min_apexes;
            }
            std::cout << rec.dump() << "\n";
        }
    });
    return violation ? kExitViolation : kExitOk;
}

/* ---------------------------------------------------------------- bounds */

const char* kBoundsCsvHeader =
    "graph6,n,r,m,sum_d2,sum_d2_bound,sum_d2_slack,sum_d2_equal,"
    "shifted_sum,shifted_bound,shifted_slack,shifted_equal,"
    "rho,rho_lower,rho_lower_slack,rho_lower_equal,"
    "rho_turan,rho_turan_slack,rho_turan_equal,sat_edges,ex_edges,all_hold";

std::string bounds_csv_row(const std::string& g6, const ksat_bounds_report& rep) {
    std::string row = "\"" + g6 + "\"";
    row += "," + std::to_string(rep.n) + "," + std::to_string(rep.r) + "," +
           std::to_string(rep.edges);
    row += "," + std::to_string(rep.sum_d2) + "," + std::to_string(rep.sum_d2_bound) + "," +
           std::to_string(rep.sum_d2_slack) + "," + std::to_string(rep.sum_d2_equal);
    row += "," + std::to_string(rep.shifted_sum) + "," + std::to_string(rep.shifted_bound) + "," +
           std::to_string(rep.shifted_slack) + "," + std::to_string(rep.shifted_equal);
    row += "," + fmt(rep.rho) + "," + fmt(rep.rho_lower) + "," + fmt(rep.rho_lower_slack) + "," +
           std::to_string(rep.rho_lower_equal);
    row += "," + fmt(rep.rho_turan) + "," + fmt(rep.rho_turan_slack) + "," +
           std::to_string(rep.rho_turan_equal);
    row += "," + std::to_string(rep.sat_edges) + "," + std::to_string(rep.ex_edges) + "," +
           std::to_string(rep.all_hold);
    return row;
}

json bounds_json(const std::string& g6, const ksat_bounds_report& rep) {
    return json{{"graph6", g6},
                {"n", rep.n},
                {"r", rep.r},
                {"m", rep.edges},
                {"sum_d2", rep.sum_d2},
                {"sum_d2_bound", rep.sum_d2_bound},
                {"sum_d2_slack", rep.sum_d2_slack},
                {"sum_d2_equal", rep.sum_d2_equal != 0},
                {"shifted_sum", rep.shifted_sum},
                {"shifted_bound", rep.shifted_bound},
                {"shifted_slack", rep.shifted_slack},
                {"shifted_equal", rep.shifted_equal != 0},
                {"rho", rep.rho},
                {"rho_lower", rep.rho_lower},
                {"rho_lower_slack", rep.rho_lower_slack},
                {"rho_lower_equal", rep.rho_lower_equal != 0},
                {"rho_turan", rep.rho_turan},
                {"rho_turan_slack", rep.rho_turan_slack},
                {"rho_turan_equal", rep.rho_turan_equal != 0},
                {"sat_edges", rep.sat_edges},
                {"ex_edges", rep.ex_edges},
                {"all_hold", rep.all_hold != 0}};
}

int run_bounds(const std::string& input, int r, const std::string& format, double tol) {
    bool violation = false;
    if (format == "csv") std::cout << kBoundsCsvHeader << "\n";

    for_each_input_graph(input, [&](long index, long line_no, ksat_graph* g) {
        ksat_bounds_report rep;
        ksat_status st = ksat_verify_graph(g, r, tol, &rep);
        if (st != KSAT_OK) {
            std::cerr << "ksat: line " << line_no << ": " << ksat_status_name(st) << " ("
                      << ksat_last_error() << ")\n";
            std::exit(kExitUsage);
        }
        if (rep.all_hold == 0) violation = true;
        std::string g6 = graph_g6(g);
        if (format == "text") {
            std::cout << "graph " << index + 1 << " (n=" << rep.n << ", m=" << rep.edges
                      << ", r=" << r << ")\n"
                      << "  sum d^2:        " << rep.sum_d2 << " >= " << rep.sum_d2_bound
                      << (rep.sum_d2_equal ? "  [equality]" : "") << "\n"
                      << "  sum (d+1)(d+1-r): " << rep.shifted_sum << " >= " << rep.shifted_bound
                      << (rep.shifted_equal ? "  [equality]" : "") << "\n"
                      << "  rho:            " << fmt(rep.rho) << " >= " << fmt(rep.rho_lower)
                      << (rep.rho_lower_equal ? "  [equality]" : "") << "\n"
                      << "  rho vs Turan:   " << fmt(rep.rho) << " <= " << fmt(rep.rho_turan)
                      << (rep.rho_turan_equal ? "  [equality]" : "") << "\n"
                      << "  edge range:     sat " << rep.sat_edges << " <= m=" << rep.edges
                      << " <= ex " << rep.ex_edges << "\n"
                      << "  all bounds hold: " << (rep.all_hold ? "yes" : "NO") << "\n";
        } else if (format == "csv") {
            std::cout << bounds_csv_row(g6, rep) << "\n";
        } else {
            std::cout << bounds_json(g6, rep).dump() << "\n";
        }
    });
    return violation ? kExitViolation : kExitOk;
}

/* -------------------------------------------------------------- spectrum */

int run_spectrum(const std::string& input, int r, const std::string& format) {
    bool violation = false;
    if (format == "csv")
        std::cout << "index,graph6,n,m,method,rho,degree_bound,lambda_min,lambda_bound,"
                     "lambda_holds,eigenvalues\n";

    for_each_input_graph(input, [&](long index, long line_no, ksat_graph* g) {
        const int n = ksat_graph_order(g);
        double values[KSAT_MAX_VERTICES];
        int count = 0;
        check_status(ksat_full_spectrum(g, values, KSAT_MAX_VERTICES, &count, nullptr),
                     "spectrum");
        double rho = 0;
        ksat_spectral_method method = KSAT_METHOD_POWER_ITERATION;
        check_status(ksat_spectral_radius(g, &rho, &method), "spectral radius");
        double degree_bound = 0;
        check_status(ksat_rayleigh_degree_bound(g, &degree_bound), "degree bound");

        bool have_lambda = false;
        double lambda_min = 0, lambda_bound = 0;
        int lambda_holds = 1;
        if (r > 0 && ksat_graph_edge_count(g) > 0) {
            ksat_status st = ksat_lambda_min_check(g, r, &lambda_min, &lambda_bound, &lambda_holds);
            if (st == KSAT_OK) {
                have_lambda = true;
                if (lambda_holds == 0) violation = true;
            } else if (st != KSAT_ERR_PARAM) {
                std::cerr << "ksat: line " << line_no << ": " << ksat_last_error() << "\n";
                std::exit(kExitUsage);
            }
            // KSAT_ERR_PARAM here means the graph is not K_{r+1}-free; the
            // bound does not apply, so the row simply omits it.
        }

        const char* method_name =
            method == KSAT_METHOD_POWER_ITERATION ? "power_iteration" : "full_solver";
        std::string eigen_list;
        for (int i = 0; i < count; ++i) eigen_list += (i ? ";" : "") + fmt(values[i]);

        if (format == "text") {
            std::cout << "graph " << index + 1 << ": n=" << n
                      << " m=" << ksat_graph_edge_count(g) << "\n"
                      << "  rho: " << fmt(rho) << "  (method: " << method_name << ")\n"
                      << "  degree bound sqrt(sum d^2 / n): " << fmt(degree_bound) << "\n"
                      << "  eigenvalues:";
            for (int i = 0; i < count; ++i) std::cout << " " << fmt(values[i]);
            std::cout << "\n";
            if (have_lambda)
                std::cout << "  lambda_min: " << fmt(lambda_min) << " < " << fmt(lambda_bound)
                          << " (K_" << r + 1 << "-free bound): "
                          << (lambda_holds ? "holds" : "VIOLATED") << "\n";
        } else if (format == "csv") {
            std::cout << index + 1 << ",\"" << graph_g6(g) << "\"," << n << ","
                      << ksat_graph_edge_count(g) << "," << method_name << "," << fmt(rho) << ","
                      << fmt(degree_bound) << ",";
            if (have_lambda)
                std::cout << fmt(lambda_min) << "," << fmt(lambda_bound) << "," << lambda_holds;
            else
                std::cout << ",,";
            std::cout << "," << eigen_list << "\n";
        } else {
            json rec{{"index", index + 1},
                     {"graph6", graph_g6(g)},
                     {"n", n},
                     {"m", ksat_graph_edge_count(g)},
                     {"method", method_name},
                     {"rho", rho},
                     {"degree_bound", degree_bound},
                     {"eigenvalues", std::vector<double>(values, values + count)}};
            if (have_lambda) {
                rec["lambda_min"] = lambda_min;
                rec["lambda_bound"] = lambda_bound;
                rec["lambda_holds"] = lambda_holds != 0;
            }
            std::cout << rec.dump() << "\n";
        }
    });
    return violation ? kExitViolation : kExitOk;
}

/* ---------------------------------------------------------------- search */

int run_search(int n, int r, int workers, int shard_bits, bool allow_n8, double tol,
               const std::string& out_path, const std::string& bounds_csv,
               const std::string& format) {
    ksat_census_options opt{};
    opt.workers = resolve_workers(workers);
    opt.shard_bits = shard_bits;
    opt.allow_order_8 = allow_n8 ? 1 : 0;
    opt.spectral_tol = tol;

    ksat_census* raw = nullptr;
    check_status(ksat_census_run(n, r, &opt, &raw), "census failed");
    CensusPtr census(raw);

    const long count = ksat_census_count(census.get());

    // Census list: newline-delimited graph6 to --output, or to stdout ahead
    // of the summary.
    {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) die_usage("cannot open output file: " + out_path);
            out = &file;
        }
        char buf[KSAT_G6_BUFSIZE];
        for (long i = 0; i < count; ++i) {
            check_status(ksat_census_member_g6(census.get(), i, buf, sizeof buf), "census member");
            *out << buf << "\n";
        }
    }

    if (!bounds_csv.empty()) {
        std::ofstream file(bounds_csv);
        if (!file) die_usage("cannot open bounds CSV file: " + bounds_csv);
        file << kBoundsCsvHeader << "\n";
        char buf[KSAT_G6_BUFSIZE];
        for (long i = 0; i < count; ++i) {
            ksat_graph* member = nullptr;
            check_status(ksat_census_member_graph(census.get(), i, &member), "census member");
            GraphPtr g(member);
            check_status(ksat_census_member_g6(census.get(), i, buf, sizeof buf), "census member");
            ksat_bounds_report rep;
            check_status(ksat_verify_graph(g.get(), r, tol, &rep), "bounds report");
            file << bounds_csv_row(buf, rep) << "\n";
        }
    }

    ksat_census_summary sum{};
    check_status(ksat_census_summary_get(census.get(), &sum), "census summary");

    long sat_edges = 0, ex_edges = 0;
    check_status(ksat_sat_number(n, r, &sat_edges), "sat number");
    check_status(ksat_ex_number(n, r, &ex_edges), "ex number");

    if (format == "text") {
        std::cout << "census n=" << sum.n << " r=" << sum.r << ": " << sum.count
                  << " saturated graphs up to isomorphism\n"
                  << "  edges: min " << sum.min_edges << " (formula " << sat_edges << ", "
                  << sum.min_edge_attainers << " attainer" << (sum.min_edge_attainers == 1 ? "" : "s")
                  << "), max " << sum.max_edges << " (formula " << ex_edges << ")\n"
                  << "  sum d^2: min " << sum.min_sum_d2 << ", bound attainers "
                  << sum.sum_d2_attainers << "\n"
                  << "  rho: min " << fmt(sum.min_rho) << " (" << sum.min_rho_attainers
                  << " attainer" << (sum.min_rho_attainers == 1 ? "" : "s") << ", lower bound "
                  << fmt(sum.rho_lower) << ")\n"
                  << "  s-graph: rho " << fmt(sum.s_graph_rho) << " (gap over lower bound "
                  << fmt(sum.s_graph_rho - sum.rho_lower) << "), census index "
                  << sum.s_graph_index << "\n"
                  << "  s-graph attains min rho: "
                  << (sum.s_graph_attains_min_rho ? "yes" : "no") << "\n";
    } else if (format == "csv") {
        std::cout << "n,r,count,min_edges,sat_edges,min_edge_attainers,max_edges,ex_edges,"
                     "min_sum_d2,sum_d2_attainers,min_rho,min_rho_attainers,rho_lower,"
                     "s_graph_rho,s_graph_index,s_graph_attains_min_rho\n"
                  << sum.n << "," << sum.r << "," << sum.count << "," << sum.min_edges << ","
                  << sat_edges << "," << sum.min_edge_attainers << "," << sum.max_edges << ","
                  << ex_edges << "," << sum.min_sum_d2 << "," << sum.sum_d2_attainers << ","
                  << fmt(sum.min_rho) << "," << sum.min_rho_attainers << "," << fmt(sum.rho_lower)
                  << "," << fmt(sum.s_graph_rho) << "," << sum.s_graph_index << ","
                  << sum.s_graph_attains_min_rho << "\n";
    } else {
        json rec{{"n", sum.n},
                 {"r", sum.r},
                 {"count", sum.count},
                 {"min_edges", sum.min_edges},
                 {"sat_edges", sat_edges},
                 {"min_edge_attainers", sum.min_edge_attainers},
                 {"max_edges", sum.max_edges},
                 {"ex_edges", ex_edges},
                 {"min_sum_d2", sum.min_sum_d2},
                 {"sum_d2_attainers", sum.sum_d2_attainers},
                 {"min_rho", sum.min_rho},
                 {"min_rho_attainers", sum.min_rho_attainers},
                 {"rho_lower", sum.rho_lower},
                 {"s_graph_rho", sum.s_graph_rho},
                 {"s_graph_index", sum.s_graph_index},
                 {"s_graph_attains_min_rho", sum.s_graph_attains_min_rho != 0}};
        std::cout << rec.dump() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K_{r+1}-saturated graphs: constructions, bound checks, spectra and census"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named graph as graph6");
    std::string family;
    int c_n = 0, c_r = 0;
    std::string c_out;
    construct->add_option("--family", family, "s | turan | c5 | petersen | hoffman-singleton")
        ->required();
    construct->add_option("--n", c_n, "vertex count (s, turan)");
    construct->add_option("--r", c_r, "clique parameter (s, turan)");
    construct->add_option("--output", c_out, "write to file instead of stdout");

    // check
    auto* check = app.add_subcommand("check", "saturation verdicts and apex reports");
    std::string k_input = "-";
    int k_r = 0;
    std::string k_format = "text";
    check->add_option("input", k_input, "graph6 stream path, - for stdin");
    check->add_option("--r", k_r, "clique parameter")->required();
    check->add_option("--format", k_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "per-graph bound reports for saturated graphs");
    std::string b_input = "-";
    int b_r = 0;
    std::string b_format = "csv";
    double b_tol = 1e-9;
    bounds->add_option("input", b_input, "graph6 stream path, - for stdin");
    bounds->add_option("--r", b_r, "clique parameter")->required();
    bounds->add_option("--format", b_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    bounds->add_option("--spectral-tol", b_tol, "tolerance for spectral comparisons")
        ->check(CLI::NonNegativeNumber);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and spectral bounds");
    std::string s_input = "-";
    int s_r = 0;
    std::string s_format = "text";
    spectrum->add_option("input", s_input, "graph6 stream path, - for stdin");
    spectrum->add_option("--r", s_r,
                         "also report the K_{r+1}-free smallest-eigenvalue bound");
    spectrum->add_option("--format", s_format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // search
    auto* search = app.add_subcommand("search", "exhaustive census of saturated graphs");
    int e_n = 0, e_r = 0, e_workers = 0, e_shard_bits = -1;
    bool e_allow_n8 = false;
    double e_tol = 1e-9;
    std::string e_out, e_bounds_csv, e_format = "text";
    search->add_option("--n", e_n, "vertex count (3..8)")->required();
    search->add_option("--r", e_r, "clique parameter (2..n-1)")->required();
    search->add_option("--workers", e_workers,
                       "worker threads (default: KSAT_WORKERS or hardware)");
    search->add_option("--shard-bits", e_shard_bits, "edge-bit prefix width for sharding");
    search->add_flag("--allow-n8", e_allow_n8, "opt in to the 2^28 sweep at n = 8");
    search->add_option("--spectral-tol", e_tol, "tie window for min-rho attainers")
        ->check(CLI::NonNegativeNumber);
    search->add_option("--output", e_out, "write census graph6 list to this file");
    search->add_option("--bounds-csv", e_bounds_csv, "write per-member bound reports to this file");
    search->add_option("--format", e_format, "summary format: text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*construct) return run_construct(family, c_n, c_r, c_out);
    if (*check) return run_check(k_input, k_r, k_format);
    if (*bounds) return run_bounds(b_input, b_r, b_format, b_tol);
    if (*spectrum) {
        if (s_r != 0 && s_r < 2) die_usage("--r must be at least 2");
        return run_spectrum(s_input, s_r, s_format);
    }
    if (*search)
        return run_search(e_n, e_r, e_workers, e_shard_bits, e_allow_n8, e_tol, e_out,
                          e_bounds_csv, e_format);
    return kExitUsage;
}
