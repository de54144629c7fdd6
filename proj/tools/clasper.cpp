// clasper: an exact calculator for the quintuplet invariants of closed
// oriented 3-manifolds (homology, spin structures, linking pairing, triple
// cup forms, Rochlin function), with decision procedures for surgery
// equivalence of invariant records.
//
// Exit codes: 0 success / equivalent, 1 not equivalent or invalid,
// 2 unknown, 3 usage or parse error.

#include "clasper/decide.hpp"
#include "clasper/record_json.hpp"
#include "clasper/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace clasper;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ClasperError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses a record and insists it validates; prints the violation list and
// returns nullopt otherwise.
std::optional<InvariantRecord> load_record(const std::string& path) {
    InvariantRecord r = parse_record(read_file(path));
    auto violations = validate_record(r);
    if (!violations.empty()) {
        json doc;
        doc["file"] = path;
        doc["valid"] = false;
        doc["violations"] = violations;
        std::cout << doc.dump(2) << "\n";
        return std::nullopt;
    }
    return r;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(Int(item));
    return out;
}

int run_validate(const std::string& path) {
    InvariantRecord r = parse_record(read_file(path));
    auto violations = validate_record(r);
    json doc;
    doc["file"] = path;
    doc["valid"] = violations.empty();
    doc["violations"] = violations;
    std::cout << doc.dump(2) << "\n";
    return violations.empty() ? kExitOk : kExitNegative;
}

int run_decide(const std::string& mode_text, const std::string& path_a,
               const std::string& path_b, const std::string& sigma_bits,
               const std::string& sigma_prime_bits, const std::string& candidates_path) {
    DecideMode mode;
    if (mode_text == "y1-spin")
        mode = DecideMode::y1_spin;
    else if (mode_text == "y2-spin")
        mode = DecideMode::y2_spin;
    else if (mode_text == "y2")
        mode = DecideMode::y2_plain;
    else
        throw CLI::ValidationError("--mode must be y1-spin, y2-spin or y2");

    auto a = load_record(path_a);
    if (!a) return kExitNegative;
    auto b = load_record(path_b);
    if (!b) return kExitNegative;

    SpinOffset sigma = sigma_bits.empty() ? 0 : bits_to_offset(a->spin, sigma_bits);
    SpinOffset sigma_prime =
        sigma_prime_bits.empty() ? 0 : bits_to_offset(b->spin, sigma_prime_bits);
    std::vector<Homomorphism> candidates;
    if (!candidates_path.empty())
        candidates = parse_candidates(read_file(candidates_path), a->group, b->group);

    Decision d;
    try {
        d = decide(*a, *b, mode, sigma, sigma_prime, candidates);
    } catch (const InfiniteSearchSpaceError& e) {
        json doc;
        doc["mode"] = mode_text;
        doc["result"] = "unknown";
        doc["reason"] = e.what();
        std::cout << doc.dump(2) << "\n";
        return kExitUnknown;
    }

    json doc;
    doc["mode"] = mode_text;
    switch (d.verdict) {
        case Verdict::Equivalent: {
            doc["result"] = "equivalent";
            doc["reason"] = d.reason;
            doc["certificate"] = json::parse(serialize_certificate(*d.certificate, *a, *b));
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        case Verdict::NotEquivalent:
            doc["result"] = "not-equivalent";
            doc["reason"] = d.reason;
            std::cout << doc.dump(2) << "\n";
            return kExitNegative;
        default:
            doc["result"] = "unknown";
            doc["reason"] = d.reason;
            std::cout << doc.dump(2) << "\n";
            return kExitUnknown;
    }
}

int run_surger(const std::string& graphs_path, const std::string& record_path,
               const std::string& out_path) {
    auto r = load_record(record_path);
    if (!r) return kExitNegative;
    PullbackP p(r->spin);
    std::vector<FormalYGraph> graphs = parse_graphs(read_file(graphs_path), p);
    InvariantRecord surgered = surgery_S(*r, p, graphs);
    auto violations = validate_record(surgered);
    if (!violations.empty()) {
        json doc;
        doc["valid"] = false;
        doc["violations"] = violations;
        std::cout << doc.dump(2) << "\n";
        return kExitNegative;
    }
    std::string text = serialize_record(surgered);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ClasperError("cannot write " + out_path);
        out << text;
        json doc;
        doc["written"] = out_path;
        doc["graphs"] = graphs.size();
        std::cout << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& lemma, long bound) {
    VerifyReport report;
    if (lemma == "trivectors")
        report = verify_lemma_trivectors(bound > 0 ? Int(bound) : Int(64));
    else if (lemma == "cubic")
        report = verify_lemma_cubic(bound > 0 ? static_cast<std::size_t>(bound) : 3);
    else if (lemma == "tri")
        report = verify_lemma_tri(bound > 0 ? static_cast<std::size_t>(bound) : 3);
    else if (lemma == "square")
        report = verify_square(bound > 0 ? static_cast<std::size_t>(bound) : 200);
    else
        throw CLI::ValidationError("--lemma must be trivectors, cubic, tri or square");
    json doc;
    doc["lemma"] = lemma;
    doc["ok"] = report.ok;
    doc["report"] = report.lines;
    std::cout << doc.dump(2) << "\n";
    return report.ok ? kExitOk : kExitNegative;
}

int run_ygroup(const std::string& orders_text, const std::string& special_text) {
    std::vector<Int> orders = parse_int_list(orders_text);
    FgAbelianGroup g(orders);
    GroupElement s = g.zero();
    if (!special_text.empty()) {
        std::vector<Int> coeffs = parse_int_list(special_text);
        if (coeffs.size() != g.rank())
            throw ClasperError("--special needs one coefficient per generator");
        s = g.element(std::move(coeffs));
    }
    YGroupStructure yg = y_group(SpecialPair(g, s));
    json doc;
    json jorders = json::array(), factors = json::array();
    for (const Int& n : orders) jorders.push_back(n.str());
    for (const Int& n : yg.quotient().orders()) factors.push_back(n.str());
    doc["orders"] = jorders;
    doc["special"] = special_text.empty() ? "0" : special_text;
    doc["invariant-factors"] = factors;
    doc["generators"] = yg.generators().size();
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact surgery-equivalence calculator for 3-manifold invariant records"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check a record against all constraints");
    std::string validate_path;
    validate->add_option("record", validate_path, "record JSON file")->required();

    auto* dec = app.add_subcommand("decide", "decide surgery equivalence of two records");
    std::string mode = "y2", path_a, path_b, sigma_bits, sigma_prime_bits, candidates_path;
    dec->add_option("--mode", mode, "y1-spin | y2-spin | y2")->required();
    dec->add_option("--sigma", sigma_bits, "spin structure of the first record (bitstring)");
    dec->add_option("--sigma-prime", sigma_prime_bits,
                    "spin structure of the second record (bitstring)");
    dec->add_option("--candidates", candidates_path,
                    "JSON list of candidate isomorphism matrices (for free homology)");
    dec->add_option("a", path_a, "first record")->required();
    dec->add_option("b", path_b, "second record")->required();

    auto* surger = app.add_subcommand("surger", "apply formal Y-surgeries to a record");
    std::string graphs_path, record_path, out_path;
    surger->add_option("--graphs", graphs_path, "JSON list of Y-graphs")->required();
    surger->add_option("record", record_path, "record JSON file")->required();
    surger->add_option("-o,--output", out_path, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification oracle");
    std::string lemma;
    long bound = 0;
    verify->add_option("--lemma", lemma, "trivectors | cubic | tri | square")->required();
    verify->add_option("--bound", bound,
                       "size bound: max |H| (trivectors), max generators (cubic/tri), "
                       "trials per shape (square)");

    auto* ygroup = app.add_subcommand("ygroup", "invariant factors of the group Y(A, s)");
    std::string orders_text, special_text;
    ygroup->add_option("--orders", orders_text, "comma-separated generator orders")->required();
    ygroup->add_option("--special", special_text,
                       "comma-separated coefficients of the special element (default 0)");

    try {
        app.parse(argc, argv);
        if (*validate) return run_validate(validate_path);
        if (*dec)
            return run_decide(mode, path_a, path_b, sigma_bits, sigma_prime_bits,
                              candidates_path);
        if (*surger) return run_surger(graphs_path, record_path, out_path);
        if (*verify) return run_verify(lemma, bound);
        if (*ygroup) return run_ygroup(orders_text, special_text);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ClasperError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
