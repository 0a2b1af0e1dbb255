#include "cobord/decompose.hpp"
#include "cobord/geometry.hpp"
#include "cobord/pairing.hpp"
#include "cobord/parallel.hpp"
#include "cobord/partitions.hpp"
#include "cobord/relations.hpp"
#include "cobord/serialize.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

using cobord::Json;

struct GlobalOptions {
    bool json = false;
    std::optional<std::filesystem::path> cache_dir;
    unsigned threads = 1;
};

void emit(const Json& j) { std::cout << cobord::dump_canonical(j); }

Json decomposition_to_json(const cobord::Decomposition& d) {
    Json coeffs = Json::array();
    for (const auto& [pair, coeff] : d) {
        Json entry = cobord::to_json(pair);
        entry["coeff"] = cobord::to_json(coeff);
        coeffs.push_back(std::move(entry));
    }
    return coeffs;
}

// "-2*[P2, O] + 2*[P2, O(1)] + ..."
std::string decomposition_to_text(const cobord::Decomposition& d, int r) {
    if (d.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& [pair, coeff] = d[i];
        if (i == 0) {
            if (coeff.sign() < 0) s += "-";
        } else {
            s += coeff.sign() < 0 ? " - " : " + ";
        }
        s += cobord::abs(coeff).str() + "*" + cobord::class_name(cobord::phi(pair, r));
    }
    return s;
}

int run_basis(const GlobalOptions& g, int n, int r, bool lists) {
    if (lists) {
        auto all = cobord::enumerate_lists(n, r);
        if (g.json) {
            Json out = Json::array();
            for (const auto& l : all) {
                Json entry = cobord::to_json(l);
                entry["name"] = cobord::list_name(cobord::phi_list(l));
                out.push_back(std::move(entry));
            }
            emit(out);
        } else {
            for (const auto& l : all) std::cout << cobord::list_name(cobord::phi_list(l)) << "\n";
        }
    } else {
        auto all = cobord::enumerate_pairs(n, r);
        if (g.json) {
            Json out = Json::array();
            for (const auto& p : all) {
                Json entry = cobord::to_json(p);
                entry["name"] = cobord::class_name(cobord::phi(p, r));
                out.push_back(std::move(entry));
            }
            emit(out);
        } else {
            for (const auto& p : all) std::cout << cobord::class_name(cobord::phi(p, r)) << "\n";
        }
    }
    return 0;
}

int run_count(int n, int r) {
    Json out{{"pairs", cobord::enumerate_pairs(n, r).size()},
             {"monomials", cobord::enumerate_monomials(n, r).size()},
             {"chern_dim", cobord::enumerate_monomials(n, r).size()}};
    emit(out);
    return 0;
}

int run_matrix(const GlobalOptions& g, int n, int r, bool verify) {
    cobord::PairingMatrix m = cobord::build_matrix_cached(n, r, g.cache_dir);
    Json out = cobord::to_json(m);
    bool ok = true;
    if (verify) {
        auto tri = cobord::verify_block_triangular(m);
        auto blocks = cobord::verify_diagonal_blocks(m);
        cobord::Rational det = cobord::determinant(m);
        bool dims = cobord::dimension_identity(n, r);
        ok = tri.passed && blocks.passed && !det.is_zero() && dims;
        Json violations = Json::array();
        for (const auto& v : tri.violations)
            violations.push_back(Json{{"row", v.row}, {"col", v.col}, {"value", v.value.str()}});
        Json mismatches = Json::array();
        for (const auto& b : blocks.mismatches)
            mismatches.push_back(Json{{"mu", cobord::to_json(b.mu)},
                                      {"row", b.row},
                                      {"col", b.col},
                                      {"got", b.got.str()},
                                      {"expected", b.expected.str()}});
        out["verification"] = Json{{"block_triangular", tri.passed},
                                   {"violations", std::move(violations)},
                                   {"diagonal_blocks", blocks.passed},
                                   {"mismatches", std::move(mismatches)},
                                   {"determinant", det.str()},
                                   {"nonsingular", !det.is_zero()},
                                   {"dimension_identity", dims}};
    }
    if (g.json) {
        emit(out);
    } else {
        std::cout << "M_{" << n << "," << r << "}  (" << m.index.size() << "x" << m.index.size()
                  << ")\n";
        for (std::size_t i = 0; i < m.index.size(); ++i)
            std::cout << "col " << i << ": " << m.index[i].str() << "\n";
        for (const auto& row : m.rows) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j].str();
            std::cout << "\n";
        }
        if (verify) std::cout << (ok ? "verification: pass\n" : "verification: FAIL\n");
    }
    return ok ? 0 : 1;
}

int run_chern_vector(const GlobalOptions& g, const std::string& file) {
    cobord::ClassSpec c = cobord::class_spec_from_json(cobord::parse_json_file(file), file);
    (void)g;
    emit(cobord::to_json(cobord::chern_vector(c)));
    return 0;
}

int run_decompose(const GlobalOptions& g, const std::string& file) {
    cobord::ClassSpec c = cobord::class_spec_from_json(cobord::parse_json_file(file), file);
    cobord::Decomposition d = cobord::decompose(c, g.cache_dir);
    if (!g.json) std::cout << decomposition_to_text(d, c.r) << "\n";
    emit(Json{{"n", c.n}, {"r", c.r}, {"coefficients", decomposition_to_json(d)}});
    return 0;
}

int run_product(const GlobalOptions& g, const std::string& file1, const std::string& file2) {
    (void)g;
    cobord::GeneratorSpec g1 =
        cobord::generator_from_json(cobord::parse_json_file(file1), file1);
    cobord::GeneratorSpec g2 =
        cobord::generator_from_json(cobord::parse_json_file(file2), file2);
    cobord::GeneratorSpec product = cobord::external_product(g1, g2);
    Json out = cobord::to_json(product);
    out["name"] = cobord::class_name(product);
    out["dimension"] = product.dimension();
    out["rank"] = product.rank();
    emit(out);
    return 0;
}

int run_question(const GlobalOptions& g, int a, int b) {
    cobord::Decomposition d = cobord::question(a, b, g.cache_dir);
    if (!g.json)
        std::cout << "[P" << a << "xP" << b << ", O(1,1)] = " << decomposition_to_text(d, 1)
                  << "\n";
    emit(Json{{"a", a}, {"b", b}, {"n", a + b}, {"r", 1}, {"coefficients", decomposition_to_json(d)}});
    return 0;
}

int run_verify_relations(const GlobalOptions& g, const std::string& family_str, int max_dim) {
    (void)g;
    cobord::RelationFamily family;
    if (family_str == "pb")
        family = cobord::RelationFamily::ProjectiveBundle;
    else if (family_str == "pb-first")
        family = cobord::RelationFamily::FirstBundle;
    else if (family_str == "nc")
        family = cobord::RelationFamily::NormalCone;
    else
        throw CLI::ValidationError("--family", "must be one of pb, pb-first, nc");
    cobord::SuiteReport report = cobord::run_relation_suite(family, max_dim);
    Json failures = Json::array();
    for (const auto& [c, v] : report.failures) {
        Json nonzero = Json::array();
        for (const auto& [q, value] : v.nonzero)
            nonzero.push_back(Json{{"monomial", q.str()}, {"value", value.str()}});
        failures.push_back(Json{{"case", c.str()}, {"nonzero", std::move(nonzero)}});
    }
    emit(Json{{"family", family_str},
              {"max_dim", max_dim},
              {"cases", report.cases},
              {"passes", report.passes},
              {"failures", std::move(failures)}});
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for double point cobordism of bundles on varieties:\n"
                 "bases, Chern invariants, pairing matrices, basis decompositions and\n"
                 "relation verification, all in exact rational arithmetic."};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand

    GlobalOptions g;
    app.add_flag("--json", g.json, "machine-readable JSON output only");
    std::string cache_dir_str;
    app.add_option("--cache-dir", cache_dir_str,
                   "pairing-matrix cache directory (default: $COBORD_CACHE_DIR or ./cobord-cache)");
    app.add_option("--threads", g.threads, "worker threads (0 = all hardware threads)")
        ->default_val(1u);

    int n = 0, r = 0, a = 0, b = 0, max_dim = 2;
    bool lists = false, verify = false;
    std::string file, file2, family;

    CLI::App* basis = app.add_subcommand("basis", "list the basis classes of dimension n, rank r");
    basis->add_option("n", n)->required();
    basis->add_option("r", r)->required();
    basis->add_flag("--lists", lists, "line-bundle-list basis instead of pairs");

    CLI::App* matrix = app.add_subcommand("matrix", "pairing matrix M_{n,r}");
    matrix->add_option("n", n)->required();
    matrix->add_option("r", r)->required();
    matrix->add_flag("--verify", verify, "check triangularity, diagonal blocks, determinant");

    CLI::App* count = app.add_subcommand("count", "basis / monomial counts");
    count->add_option("n", n)->required();
    count->add_option("r", r)->required();

    CLI::App* chern = app.add_subcommand("chern-vector", "Chern invariants of a class (JSON file)");
    chern->add_option("file", file)->required()->check(CLI::ExistingFile);

    CLI::App* dec = app.add_subcommand("decompose", "decompose a class (JSON file) in the basis");
    dec->add_option("file", file)->required()->check(CLI::ExistingFile);

    CLI::App* product = app.add_subcommand("product", "external product of two generators");
    product->add_option("file1", file)->required()->check(CLI::ExistingFile);
    product->add_option("file2", file2)->required()->check(CLI::ExistingFile);

    CLI::App* question = app.add_subcommand("question", "decompose [P^a x P^b, O(1,1)]");
    question->add_option("a", a)->required();
    question->add_option("b", b)->required();

    CLI::App* rel = app.add_subcommand("verify-relations", "vanishing sweep of a relation family");
    rel->add_option("--family", family, "pb | pb-first | nc")->required();
    rel->add_option("--max-dim", max_dim, "largest relation dimension")->required();

    CLI11_PARSE(app, argc, argv);

    if (!cache_dir_str.empty()) g.cache_dir = cache_dir_str;
    cobord::set_thread_count(g.threads);

    try {
        if (basis->parsed()) return run_basis(g, n, r, lists);
        if (matrix->parsed()) return run_matrix(g, n, r, verify);
        if (count->parsed()) return run_count(n, r);
        if (chern->parsed()) return run_chern_vector(g, file);
        if (dec->parsed()) return run_decompose(g, file);
        if (product->parsed()) return run_product(g, file, file2);
        if (question->parsed()) return run_question(g, a, b);
        if (rel->parsed()) return run_verify_relations(g, family, max_dim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
