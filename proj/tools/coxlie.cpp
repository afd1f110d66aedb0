// Command-line front end: JSON in, JSON out.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input
// error (malformed JSON, out-of-range vertex, cap violation).

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxlie/cox_word.hpp"
#include "coxlie/free_word.hpp"
#include "coxlie/gscox.hpp"
#include "coxlie/homology.hpp"
#include "coxlie/lie2.hpp"
#include "coxlie/nq.hpp"
#include "coxlie/simplicial_complex.hpp"
#include "coxlie/verify.hpp"
#include "json.hpp"

namespace {

using coxlie::SimplicialComplex;
using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<int>> parse_face_list(const json& j, const char* key) {
    std::vector<std::vector<int>> out;
    for (const json& face : j.at(key)) {
        std::vector<int> f;
        for (const json& v : face) {
            if (!v.is_number_integer())
                throw std::invalid_argument("vertex labels must be integers");
            f.push_back(v.get<int>());
        }
        out.push_back(std::move(f));
    }
    return out;
}

// Accepted schema: {"m": 4, "faces": [[1,2],[2,3]]} (downward closure is
// applied) or {"m": 4, "edges": [[1,2]], "flag": true} (clique complex of
// the graph).  "edges" without "flag" ingests the graph as a 1-dimensional
// complex.
SimplicialComplex load_complex(const std::string& path) {
    const json j = json::parse(read_input(path));
    if (!j.is_object() || !j.contains("m") || !j.at("m").is_number_integer())
        throw std::invalid_argument("input must be an object with integer \"m\"");
    const int m = j.at("m").get<int>();
    const bool flag = j.value("flag", false);
    if (j.contains("faces")) {
        if (flag) throw std::invalid_argument("\"flag\" applies to \"edges\" input only");
        return coxlie::make_complex(m, parse_face_list(j, "faces"));
    }
    if (j.contains("edges")) {
        const auto lists = parse_face_list(j, "edges");
        if (!flag) return coxlie::make_complex(m, lists);
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : lists) {
            if (e.size() != 2) throw std::invalid_argument("edges must have two vertices");
            edges.emplace_back(e[0], e[1]);
        }
        return coxlie::flag_complex_of_graph(m, edges);
    }
    throw std::invalid_argument("input needs a \"faces\" or \"edges\" array");
}

// "(1,2,1,1)" -> {1,2,1,1}: a left-nested commutator of vertex generators.
std::vector<int> parse_commutator_word(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("commutator word must look like \"(1,2,1,1)\"");
    ++i;
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected a generator index");
        out.push_back(std::stoi(text.substr(start, i - start)));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("unterminated commutator word");
    ++i;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters after ')'");
    return out;
}

json invariants_json(const coxlie::AbelianInvariants& a) {
    json torsion = json::array();
    for (const coxlie::Int& t : a.torsion) torsion.push_back(t.convert_to<long>());
    return json{{"free_rank", a.free_rank}, {"torsion", torsion}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_dims(const std::string& input, int cls) {
    const SimplicialComplex k = load_complex(input);
    const coxlie::PcPresentation pc =
        coxlie::nilpotent_quotient(coxlie::racg_presentation(k), cls);
    json dims = json::array();
    json invariants = json::array();
    for (int deg = 1; deg <= cls; ++deg) {
        long dim = 0;
        for (int g = 1; g <= pc.count; ++g)
            if (pc.weight[g] == deg) ++dim;
        dims.push_back(dim);
        json layer = json::array();
        for (const coxlie::Int& t :
             pc.graded[static_cast<std::size_t>(deg - 1)].as_list())
            layer.push_back(t.convert_to<long>());
        invariants.push_back(layer);
    }
    emit(json{{"m", k.m()}, {"class", cls}, {"dims", dims}, {"invariants", invariants}});
    return 0;
}

int cmd_homology(const std::string& input, int deg) {
    const SimplicialComplex k = load_complex(input);
    if (deg > k.m()) throw std::invalid_argument("degree exceeds the vertex count");
    json results = json::array();
    bool agree = true;
    const int lo = deg >= 0 ? deg : 0;
    const int hi = deg >= 0 ? deg : k.m();
    for (int d = lo; d <= hi; ++d) {
        const coxlie::AbelianInvariants a = coxlie::rmk_homology(k, d);
        const coxlie::AbelianInvariants b = coxlie::cubical_rmk_homology(k, d);
        const bool same = a == b;
        agree = agree && same;
        json r = invariants_json(a);
        r["deg"] = d;
        r["cubical_agrees"] = same;
        results.push_back(r);
    }
    emit(json{{"m", k.m()}, {"results", results}, {"agree", agree}});
    return agree ? 0 : 1;
}

int cmd_gens(const std::string& input) {
    const SimplicialComplex k = load_complex(input);
    const auto patterns = coxlie::gscox_generators(k);
    json list = json::array();
    for (const coxlie::CommutatorPattern& p : patterns) list.push_back(p.as_tuple());
    emit(json{{"m", k.m()},
              {"count", static_cast<long>(patterns.size())},
              {"patterns", list}});
    return 0;
}

int cmd_identities(int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long failures = 0;
    for (int t = 0; t < trials; ++t) {
        const coxlie::FreeWord a = coxlie::random_word(rng, 4, 6);
        const coxlie::FreeWord b = coxlie::random_word(rng, 4, 6);
        const coxlie::FreeWord c = coxlie::random_word(rng, 4, 6);
        if (!coxlie::verify_hall_witt(a, b, c)) ++failures;
        if (!coxlie::verify_triple_lemma(a, b, c)) ++failures;
    }
    emit(json{{"trials", trials}, {"seed", seed}, {"failures", failures}});
    return failures == 0 ? 0 : 1;
}

int cmd_racg_identities(const std::string& input) {
    const SimplicialComplex k = load_complex(input);
    long pairs = 0, failures = 0;
    for (int i = 1; i <= k.m(); ++i)
        for (int j = i + 1; j <= k.m(); ++j) {
            ++pairs;
            if (!coxlie::verify_square_identity(k, i, j)) ++failures;
            if (!coxlie::verify_degree4_expansion(k, i, j)) ++failures;
        }
    emit(json{{"m", k.m()}, {"pairs", pairs}, {"failures", failures}});
    return failures == 0 ? 0 : 1;
}

int cmd_lie_dims(const std::string& input, int dmax, bool with_squares) {
    const SimplicialComplex k = load_complex(input);
    std::vector<coxlie::Lie2Element> extra;
    if (with_squares) extra = coxlie::square_relations(k.m());
    const std::vector<long> dims = coxlie::quotient_dims(k.m(), k.edges(), extra, dmax);
    emit(json{{"m", k.m()},
              {"dmax", dmax},
              {"with_square_relations", with_squares},
              {"dims", dims}});
    return 0;
}

int cmd_lie_compare(const std::string& input, int dmax) {
    const SimplicialComplex k = load_complex(input);
    const coxlie::LieGroupComparison cmp = coxlie::compare_with_group(k, dmax);
    emit(json{{"m", k.m()},
              {"dmax", dmax},
              {"lie_dims", cmp.lie_dims},
              {"group_dims", cmp.group_dims},
              {"kernel_dims", cmp.kernel_dims}});
    return 0;
}

int cmd_express(const std::string& input, const std::string& word_text, int cls,
                int degree) {
    const SimplicialComplex k = load_complex(input);
    const std::vector<int> tuple = parse_commutator_word(word_text);
    if (degree == 0) degree = static_cast<int>(tuple.size());
    if (cls == 0) cls = degree;
    if (cls < degree)
        throw std::invalid_argument("class must be at least the requested degree");
    const coxlie::PcPresentation pc =
        coxlie::nilpotent_quotient(coxlie::racg_presentation(k), cls);
    const std::optional<std::vector<coxlie::Exp>> coords =
        coxlie::express(pc, coxlie::simple_nested(tuple), degree);
    if (!coords) {
        std::cerr << "word does not lie in the degree-" << degree
                  << " term of the lower central series\n";
        return 1;
    }
    json c = json::array();
    for (coxlie::Exp e : *coords) c.push_back(static_cast<long>(e));
    emit(json{{"m", k.m()},
              {"word", word_text},
              {"degree", degree},
              {"class", cls},
              {"coordinates", c}});
    return 0;
}

int cmd_verify(const std::string& scope, bool as_json) {
    const std::vector<coxlie::ClaimReport> reports = coxlie::run_all(scope);
    if (reports.empty())
        throw std::invalid_argument("no claim id starts with \"" + scope + "\"");
    bool all = true;
    for (const coxlie::ClaimReport& r : reports) all = all && r.passed;
    if (as_json) {
        json list = json::array();
        for (const coxlie::ClaimReport& r : reports)
            list.push_back(json{{"id", r.id}, {"passed", r.passed}, {"witness", r.witness}});
        emit(json{{"claims", list}, {"all_passed", all}});
    } else {
        for (const coxlie::ClaimReport& r : reports)
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  ("
                      << r.witness << ")\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower central series of right-angled Coxeter groups"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string word_text;
    std::string scope;
    int cls = 0;
    int deg = -1;
    int dmax = 4;
    int trials = 100;
    std::uint64_t seed = 12345;
    bool with_squares = false;
    bool as_json = false;

    CLI::App* dims = app.add_subcommand("dims", "Graded layer dimensions of the group");
    dims->add_option("--class", cls, "Nilpotency class (defaults to the cap)");
    dims->add_option("input", input, "Complex JSON file, or - for stdin");

    CLI::App* homology = app.add_subcommand("homology", "Homology of the real moment-angle complex");
    homology->add_option("--deg", deg, "Single degree (default: all 0..m)");
    homology->add_option("input", input, "Complex JSON file, or - for stdin");

    CLI::App* gens = app.add_subcommand("gens", "Combinatorial generating patterns for H_1");
    gens->add_option("input", input, "Complex JSON file, or - for stdin");

    CLI::App* identities = app.add_subcommand("identities", "Fuzz the free-group commutator identities");
    identities->add_option("--trials", trials, "Number of random triples")
        ->check(CLI::NonNegativeNumber);
    identities->add_option("--seed", seed, "RNG seed");

    CLI::App* racg_identities =
        app.add_subcommand("racg-identities", "Check the square and degree-4 identities in the group");
    racg_identities->add_option("input", input, "Complex JSON file, or - for stdin");

    CLI::App* lie_dims = app.add_subcommand("lie-dims", "Dimensions of the quadratic Lie algebra");
    lie_dims->add_option("--dmax", dmax, "Largest degree")->check(CLI::Range(1, 5));
    lie_dims->add_flag("--with-square-relations", with_squares,
                       "Also impose the cubic consequences of the square identity");
    lie_dims->add_option("input", input, "Complex JSON file, or - for stdin");

    CLI::App* lie_compare =
        app.add_subcommand("lie-compare", "Lie algebra versus group layer dimensions");
    lie_compare->add_option("--dmax", dmax, "Largest degree")->check(CLI::Range(1, 5));
    lie_compare->add_option("input", input, "Complex JSON file, or - for stdin");

    int express_degree = 0;
    CLI::App* express = app.add_subcommand("express", "Coordinates of a nested commutator in its layer");
    express->add_option("--class", cls, "Nilpotency class (defaults to the degree)");
    express->add_option("--word", word_text, "Left-nested commutator, e.g. \"(1,2,1,1)\"")
        ->required();
    express->add_option("--degree", express_degree,
                        "Layer to express in (defaults to the word's length; "
                        "exits 1 if the word lies outside that term)");
    express->add_option("input", input, "Complex JSON file, or - for stdin");

    CLI::App* verify = app.add_subcommand("verify-paper", "Run the claim regression suite");
    verify->add_option("--case", scope, "Only claims whose id starts with this prefix");
    verify->add_flag("--json", as_json, "JSON report instead of a table");

    try {
        app.parse(argc, argv);
        if (dims->parsed()) return cmd_dims(input, cls == 0 ? coxlie::class_cap() : cls);
        if (homology->parsed()) return cmd_homology(input, deg);
        if (gens->parsed()) return cmd_gens(input);
        if (identities->parsed()) return cmd_identities(trials, seed);
        if (racg_identities->parsed()) return cmd_racg_identities(input);
        if (lie_dims->parsed()) return cmd_lie_dims(input, dmax, with_squares);
        if (lie_compare->parsed()) return cmd_lie_compare(input, dmax);
        if (express->parsed()) return cmd_express(input, word_text, cls, express_degree);
        if (verify->parsed()) return cmd_verify(scope, as_json);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
