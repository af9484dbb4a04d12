// Command-line surface: single classification, box scans with cross
// validation, family verification, Mordell curve search, and reproduction of
// the published classification tables.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sextic/families.hpp"
#include "sextic/mordell.hpp"
#include "sextic/parallel.hpp"
#include "sextic/record.hpp"

using namespace sextic;
using ordered_json = nlohmann::ordered_json;

namespace {

bool parse_range(const std::string& s, long long& lo, long long& hi) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoll(s.substr(0, colon));
        hi = std::stoll(s.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

bool parse_k_list(const std::string& s, std::vector<int>& ks) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "1") ks.push_back(1);
        else if (item == "2") ks.push_back(2);
        else return false;
    }
    return !ks.empty();
}

int cmd_classify(long long k, long long A, long long B, const std::string& method) {
    Trinomial t(int(k), A, B);
    Classification cls = method == "theorem" ? classify_theorem_main(t) : classify_direct(t);
    std::string method_label = method == "both" ? "both" : method_name(cls.method);
    bool mismatch = false;
    if (method == "both") {
        Classification fast = classify_theorem_main(t);
        if (cls.irreducible &&
            (fast.monogenic != cls.monogenic || fast.galois != cls.galois)) {
            mismatch = true;
            cls.notes.push_back("pipelines disagree: fast=(" +
                                (fast.galois ? familiar_name(*fast.galois) : "-") + "," +
                                (*fast.monogenic ? "monogenic" : "not monogenic") + ")");
        } else {
            cls.notes.push_back("fast and direct pipelines agree");
        }
    }
    std::cout << make_record(cls, method_label).to_json_line() << "\n";
    return mismatch ? 1 : 0;
}

struct ScanColumn {
    std::vector<std::string> lines;
    uint64_t skipped = 0, reducible = 0, irreducible = 0, records = 0, mismatches = 0;
    std::map<GaloisGroup, uint64_t> mono;
};

int cmd_scan(const std::vector<int>& ks, long long a_lo, long long a_hi, long long b_lo,
             long long b_hi, bool cross, unsigned jobs, const std::string& out_path,
             const std::string& format) {
    const bool csv = format == "csv";

    struct Column {
        int k;
        long long a;
    };
    std::vector<Column> columns;
    for (int k : ks)
        for (long long a = a_lo; a <= a_hi; ++a) columns.push_back({k, a});

    auto work = [&](size_t idx) {
        ScanColumn col;
        auto [k, a] = columns[idx];
        for (long long b = b_lo; b <= b_hi; ++b) {
            if (a == 0 || b == 0) {
                ++col.skipped;
                if (!csv) {
                    ordered_json j;
                    j["k"] = k;
                    j["A"] = a;
                    j["B"] = b;
                    j["note"] = std::string("skipped: ") + (a == 0 ? "A=0" : "B=0");
                    col.lines.push_back(j.dump());
                }
                continue;
            }
            Trinomial t(k, a, b);
            detail::FactoredF ff = detail::analyze_f(t);
            Classification cls = detail::classify_direct_with(t, ff);
            std::string method_label = "direct";
            if (cross) {
                Classification fast = detail::classify_theorem_main_with(t, ff);
                method_label = "both";
                if (cls.irreducible &&
                    (fast.monogenic != cls.monogenic || fast.galois != cls.galois)) {
                    ++col.mismatches;
                    cls.notes.push_back(
                        "pipelines disagree: fast=(" + familiar_name(*fast.galois) + "," +
                        (*fast.monogenic ? "monogenic" : "not monogenic") + ")");
                } else if (cls.irreducible) {
                    cls.notes.push_back("fast and direct pipelines agree");
                }
            }
            if (cls.irreducible) {
                ++col.irreducible;
                if (*cls.monogenic) ++col.mono[*cls.galois];
            } else {
                ++col.reducible;
            }
            ++col.records;
            OutputRecord rec = make_record(cls, method_label);
            col.lines.push_back(csv ? rec.to_csv_row() : rec.to_json_line());
        }
        return col;
    };

    std::vector<ScanColumn> cols = parallel_map<ScanColumn>(columns.size(), work, jobs);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        os = &file;
    }
    if (csv) *os << OutputRecord::csv_header() << "\n";
    uint64_t skipped = 0, reducible = 0, irreducible = 0, records = 0, mismatches = 0;
    std::map<GaloisGroup, uint64_t> mono;
    for (const auto& col : cols) {
        for (const auto& line : col.lines) *os << line << "\n";
        skipped += col.skipped;
        reducible += col.reducible;
        irreducible += col.irreducible;
        records += col.records;
        mismatches += col.mismatches;
        for (const auto& [g, n] : col.mono) mono[g] += n;
    }
    ordered_json counts;
    uint64_t mono_total = 0;
    for (const auto& [g, n] : mono) {
        counts[familiar_name(g)] = n;
        mono_total += n;
    }
    ordered_json summary;
    summary["summary"] = {{"records", records},
                          {"skipped", skipped},
                          {"irreducible", irreducible},
                          {"reducible", reducible},
                          {"monogenic", mono_total},
                          {"monogenic_counts", counts},
                          {"cross_validated", cross},
                          {"mismatches", mismatches}};
    if (csv) std::cerr << summary.dump() << "\n";
    else *os << summary.dump() << "\n";
    return cross && mismatches > 0 ? 1 : 0;
}

int cmd_families(const std::string& family_name_arg, int count, bool verify,
                 long long max_parameter, unsigned jobs) {
    FamilyId fam = family_from_name(family_name_arg);
    if (verify) {
        FamilyVerification v = verify_family(fam, count, max_parameter, jobs);
        for (const auto& m : v.members) {
            Classification cls = classify_direct(m.trinomial);
            ordered_json j;
            j["family"] = family_name(fam);
            j["parameter"] = m.parameter;
            j["k"] = m.trinomial.k();
            j["A"] = m.trinomial.A().str();
            j["B"] = m.trinomial.B().str();
            j["admissible"] = true;
            j["galois_familiar"] = cls.galois ? familiar_name(*cls.galois) : "";
            j["galois_t"] = cls.galois ? t_notation(*cls.galois) : "";
            j["monogenic"] = cls.monogenic.value_or(false);
            j["disc_f"] = cls.disc_f.str();
            std::cout << j.dump() << "\n";
        }
        ordered_json j;
        j["family"] = family_name(fam);
        j["verified"] = v.members.size();
        j["inadmissible_parameters"] = v.inadmissible;
        j["groups_ok"] = v.groups_ok;
        j["discriminants_distinct"] = v.discriminants_distinct;
        j["delta_identity_ok"] = v.delta_identity_ok;
        j["failures"] = v.failures;
        std::cout << j.dump() << "\n";
        bool ok = v.groups_ok && v.discriminants_distinct && v.delta_identity_ok;
        return ok ? 0 : 1;
    }
    int emitted = 0;
    std::vector<long long> inadmissible;
    for (long long p = family_min_parameter(fam); emitted < count; ++p) {
        if (p > max_parameter) {
            std::cerr << "parameter cap " << max_parameter << " reached\n";
            return 1;
        }
        FamilyMember m = generate(fam, p);
        ordered_json j;
        j["family"] = family_name(fam);
        j["parameter"] = p;
        j["k"] = m.trinomial.k();
        j["A"] = m.trinomial.A().str();
        j["B"] = m.trinomial.B().str();
        j["admissible"] = m.admissible;
        std::cout << j.dump() << "\n";
        if (m.admissible) ++emitted;
    }
    return 0;
}

int cmd_mordell(long long N, long long x_bound, unsigned jobs) {
    MordellResult r = integral_points_bounded(N, x_bound, jobs);
    for (const auto& p : r.points)
        std::cout << "X=" << p.X.str() << " Y=" << p.Y.str() << "\n";
    std::cerr << r.points.size() << " point(s); complete within |X| <= " << x_bound
              << "\n";
    return 0;
}

int cmd_verify_tables(long long x_bound, unsigned jobs) {
    PaperTablesReport rep = verify_paper_tables(x_bound, jobs);
    for (const TableCheck* t : {&rep.table2, &rep.table4, &rep.table5, &rep.a4_curve}) {
        std::cout << t->name << ": " << (t->pass ? "PASS" : "FAIL") << "\n";
        for (const auto& line : t->lines) std::cout << "  " << line << "\n";
    }
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of even sextic trinomials x^6 + A x^(2k) + B: "
                 "irreducibility, Galois group, monogenicity"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "classify one trinomial");
    long long k = 0, A = 0, B = 0;
    std::string method = "direct";
    classify->add_option("--k", k, "exponent selector, 1 or 2")->required();
    classify->add_option("--A", A, "coefficient A")->required();
    classify->add_option("--B", B, "coefficient B")->required();
    classify->add_option("--method", method, "direct | theorem | both")
        ->check(CLI::IsMember({"direct", "theorem", "both"}));

    auto* scan = app.add_subcommand("scan", "classify a rectangular (k, A, B) box");
    std::string k_list = "1,2", a_range, b_range, out_path, format = "jsonl";
    bool cross = false;
    unsigned jobs = 0;
    scan->add_option("--k", k_list, "comma-separated list from {1,2}");
    scan->add_option("--A-range", a_range, "lo:hi")->required();
    scan->add_option("--B-range", b_range, "lo:hi")->required();
    scan->add_flag("--cross-validate", cross, "compare both pipelines, exit 1 on mismatch");
    scan->add_option("--jobs", jobs, "worker threads (default: SEXTIC_MONO_JOBS or all cores)");
    scan->add_option("--out", out_path, "write records to this file instead of stdout");
    scan->add_option("--format", format, "jsonl | csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    auto* families = app.add_subcommand("families", "emit/verify parametric family members");
    std::string family_arg;
    int count = 25;
    bool verify = false;
    long long max_parameter = 10000;
    families->add_option("--family", family_arg, "T1 | T2 | S | U | V1 | V2")->required();
    families->add_option("--count", count, "number of admissible members");
    families->add_flag("--verify", verify, "classify members and check the family claims");
    families->add_option("--max-parameter", max_parameter, "parameter cap");
    families->add_option("--jobs", jobs, "worker threads");

    auto* mordell = app.add_subcommand("mordell", "integral points on Y^2 = X^3 + N");
    long long N = 0, x_bound = 100000;
    mordell->add_option("--N", N, "curve constant, nonzero")->required();
    mordell->add_option("--x-bound", x_bound, "search window |X| <= bound");
    mordell->add_option("--jobs", jobs, "worker threads");

    auto* tables = app.add_subcommand("verify-tables", "recompute the classification tables");
    tables->add_option("--x-bound", x_bound, "search window |X| <= bound");
    tables->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(k, A, B, method);
        if (scan->parsed()) {
            std::vector<int> ks;
            long long a_lo, a_hi, b_lo, b_hi;
            if (!parse_k_list(k_list, ks)) {
                std::cerr << "invalid --k list: " << k_list << "\n";
                return 2;
            }
            if (!parse_range(a_range, a_lo, a_hi) || !parse_range(b_range, b_lo, b_hi)) {
                std::cerr << "invalid range (expected lo:hi with lo <= hi)\n";
                return 2;
            }
            return cmd_scan(ks, a_lo, a_hi, b_lo, b_hi, cross, jobs, out_path, format);
        }
        if (families->parsed())
            return cmd_families(family_arg, count, verify, max_parameter, jobs);
        if (mordell->parsed()) return cmd_mordell(N, x_bound, jobs);
        if (tables->parsed()) return cmd_verify_tables(x_bound, jobs);
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
