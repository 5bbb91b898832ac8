#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "ncmod/json_io.hpp"
#include "ncmod/tensor.hpp"
#include "ncmod/verify.hpp"

namespace {

using ncmod::Json;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<ncmod::AlgElem> parse_elements(const ncmod::Algebra::Ptr& alg,
                                           const std::string& joined) {
    std::vector<ncmod::AlgElem> out;
    for (const std::string& piece : split_list(joined, ';'))
        out.push_back(ncmod::AlgElem::from_string(alg, piece));
    return out;
}

Json tensor_poly_json(const ncmod::TensorPoly& tp) {
    Json terms = Json::array();
    for (const auto& t : tp.terms())
        terms.push_back(Json{{"scale", t.scale.to_string()},
                             {"prefix", ncmod::word_to_string(t.prefix, tp.variables())},
                             {"suffix", ncmod::word_to_string(t.suffix, tp.variables())}});
    return terms;
}

struct Options {
    bool text = false;
    int exit_code = 0;
};

void cmd_algebras_list(const Options& opt) {
    auto names = ncmod::builtin_names();
    if (opt.text) {
        for (const auto& n : names) std::cout << n << "\n";
        return;
    }
    print_json(Json{{"algebras", names}});
}

void cmd_algebra_show(const Options& opt, const std::string& name) {
    ncmod::Algebra::Ptr alg = ncmod::resolve_algebra(name);
    ncmod::Classification cls = ncmod::classify(alg);
    Json table = Json::array();
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < alg->dim(); ++j)
            row.push_back((alg->basis_element(i) * alg->basis_element(j)).to_string());
        table.push_back(std::move(row));
    }
    Json j;
    j["name"] = alg->name();
    j["dim"] = alg->dim();
    j["basis"] = alg->basis_labels();
    if (alg->unit_index())
        j["unit"] = *alg->unit_index();
    else
        j["unit"] = nullptr;
    j["commutative"] = cls.commutative;
    j["associative"] = cls.associative;
    j["nucleus_dim"] = cls.nucleus_dim;
    j["center_dim"] = cls.center_dim;
    j["table"] = std::move(table);
    if (opt.text) {
        std::cout << alg->name() << ": dim " << alg->dim()
                  << (cls.commutative ? ", commutative" : ", noncommutative")
                  << (cls.associative ? ", associative" : ", nonassociative")
                  << ", nucleus_dim " << cls.nucleus_dim << ", center_dim " << cls.center_dim
                  << "\n";
        for (std::size_t i = 0; i < alg->dim(); ++i)
            for (std::size_t j2 = 0; j2 < alg->dim(); ++j2)
                std::cout << alg->basis_labels()[i] << " * " << alg->basis_labels()[j2]
                          << " = " << j["table"][i][j2].get<std::string>() << "\n";
        return;
    }
    print_json(j);
}

void cmd_mul(const Options& opt, const std::string& algebra, const std::string& a,
             const std::string& b) {
    ncmod::Algebra::Ptr alg = ncmod::resolve_algebra(algebra);
    ncmod::AlgElem ea = ncmod::AlgElem::from_string(alg, a);
    ncmod::AlgElem eb = ncmod::AlgElem::from_string(alg, b);
    std::string result = (ea * eb).to_string();
    if (opt.text) {
        std::cout << result << "\n";
        return;
    }
    print_json(Json{{"algebra", alg->name()}, {"result", result}});
}

void cmd_mat(const Options& opt, const std::string& op, const std::string& a_path,
             const std::string& b_path) {
    ncmod::LoadedMatrix a = ncmod::load_matrix_file(a_path);
    bool binary = op == "rc" || op == "cr" || op == "sum";
    if (binary && b_path.empty())
        throw ncmod::DomainError("mat --op " + op + " needs two matrix files");

    Json out;
    if (a.rational_matrix) {
        ncmod::DMatrix result = *a.rational_matrix;
        if (binary) {
            ncmod::LoadedMatrix b = ncmod::load_matrix_file(b_path);
            if (!b.rational_matrix)
                throw ncmod::DomainError("mat: cannot mix rational and algebra matrices");
            if (op == "rc") result = rc_product(result, *b.rational_matrix);
            if (op == "cr") result = cr_product(result, *b.rational_matrix);
            if (op == "sum") result = mat_sum(result, *b.rational_matrix);
        } else if (op == "transpose") {
            result = transpose(result);
        }
        out = ncmod::matrix_to_json(result);
    } else {
        ncmod::AlgMatrix result = *a.algebra_matrix;
        if (binary) {
            ncmod::LoadedMatrix b = ncmod::load_matrix_file(b_path);
            if (!b.algebra_matrix || !ncmod::Algebra::same(a.algebra, b.algebra))
                throw ncmod::DomainError("mat: operands must share one algebra");
            if (op == "rc") result = rc_product(result, *b.algebra_matrix);
            if (op == "cr") result = cr_product(result, *b.algebra_matrix);
            if (op == "sum") result = mat_sum(result, *b.algebra_matrix);
        } else if (op == "transpose") {
            result = transpose(result);
        }
        out = ncmod::matrix_to_json(result, a.algebra);
    }
    print_json(out);
}

void cmd_coords(const Options& opt, const std::string& basis_path,
                const std::string& vector_path) {
    ncmod::LoadedVectors basis_data = ncmod::load_vectors_file(basis_path);
    ncmod::LoadedVectors vec_data = ncmod::load_vectors_file(vector_path);
    if (vec_data.vectors.size() != 1)
        throw ncmod::DomainError("coords: the vector file must hold exactly one vector");
    ncmod::Basis basis(basis_data.orientation, basis_data.vectors);
    basis.verify();
    ncmod::CoordsResult r = ncmod::coordinates(vec_data.vectors[0], basis);

    Json j;
    j["basis_verified"] = basis.verified();
    switch (r.kind) {
    case ncmod::CoordsKind::Unique: {
        j["kind"] = "unique";
        Json coords = Json::array();
        for (const auto& c : r.coords) coords.push_back(c.to_string());
        j["coords"] = std::move(coords);
        break;
    }
    case ncmod::CoordsKind::NotInSpan:
        j["kind"] = "not-in-span";
        break;
    case ncmod::CoordsKind::NonUnique: {
        j["kind"] = "non-unique";
        Json witness = Json::array();
        for (const auto& c : r.coords) witness.push_back(c.to_string());
        j["witness"] = std::move(witness);
        break;
    }
    }
    if (opt.text) {
        std::cout << j["kind"].get<std::string>();
        if (j.contains("coords"))
            for (const auto& c : j["coords"]) std::cout << " " << c.get<std::string>();
        if (j.contains("witness"))
            for (const auto& c : j["witness"]) std::cout << " " << c.get<std::string>();
        std::cout << "\n";
        return;
    }
    print_json(j);
}

void cmd_extend(const Options& opt, const std::string& basis_path) {
    ncmod::LoadedVectors basis_data = ncmod::load_vectors_file(basis_path);
    ncmod::Basis basis(basis_data.orientation, basis_data.vectors);
    ncmod::BasisExtension ext = ncmod::extend_basis(basis);
    Json vectors = Json::array();
    for (const auto& v : ext.vectors) {
        Json row = Json::array();
        for (std::size_t i = 0; i < v.size(); ++i) row.push_back(v.comp(i).to_string());
        vectors.push_back(std::move(row));
    }
    Json j;
    j["algebra"] = basis_data.algebra->name();
    j["orientation"] = ncmod::orientation_name(basis_data.orientation);
    j["vectors"] = std::move(vectors);
    j["rank"] = ext.rank_over_d;
    if (opt.text) {
        std::cout << "rank " << ext.rank_over_d << " of " << ext.vectors.size()
                  << " vectors\n";
        return;
    }
    print_json(j);
}

void cmd_hom_apply(const Options& opt, const std::string& hom_path,
                   const std::string& vector_arg) {
    ncmod::ModuleHom hom = ncmod::load_hom_file(hom_path);
    std::vector<ncmod::AlgElem> v = parse_elements(hom.source_algebra(), vector_arg);
    std::vector<ncmod::AlgElem> image = hom.apply(v);
    Json coords = Json::array();
    for (const auto& c : image) coords.push_back(c.to_string());
    if (opt.text) {
        for (std::size_t i = 0; i < image.size(); ++i)
            std::cout << (i ? "; " : "") << image[i].to_string();
        std::cout << "\n";
        return;
    }
    print_json(Json{{"algebra", hom.target_algebra()->name()}, {"result", coords}});
}

void cmd_hom_sum(const Options&, const std::string& a_path, const std::string& b_path) {
    ncmod::ModuleHom a = ncmod::load_hom_file(a_path);
    ncmod::ModuleHom b = ncmod::load_hom_file(b_path);
    print_json(ncmod::hom_to_json(ncmod::hom_sum(a, b)));
}

void cmd_hom_compose(const Options&, const std::string& outer_path,
                     const std::string& inner_path) {
    ncmod::ModuleHom outer = ncmod::load_hom_file(outer_path);
    ncmod::ModuleHom inner = ncmod::load_hom_file(inner_path);
    print_json(ncmod::hom_to_json(ncmod::hom_compose(outer, inner)));
}

void cmd_diff(const Options& opt, const std::string& algebra, const std::string& vars_arg,
              const std::string& expr, const std::string& wrt) {
    if (!algebra.empty()) ncmod::resolve_algebra(algebra); // validate only
    std::vector<std::string> vars = split_list(vars_arg, ',');
    ncmod::NCPoly p = ncmod::parse_ncpoly(expr, vars);
    ncmod::TensorPoly tp = ncmod::differentiate(p, wrt);
    if (opt.text) {
        std::cout << tp.to_string() << "\n";
        return;
    }
    Json j;
    j["vars"] = vars;
    j["wrt"] = wrt;
    j["terms"] = tensor_poly_json(tp);
    j["display"] = tp.to_string();
    print_json(j);
}

void cmd_jacobian(const Options& opt, const std::string& algebra, const std::string& vars_arg,
                  const std::string& maps_arg, const std::string& point_arg,
                  const std::string& disp_arg) {
    ncmod::Algebra::Ptr alg = ncmod::resolve_algebra(algebra);
    std::vector<std::string> vars = split_list(vars_arg, ',');
    auto bindings = ncmod::parse_poly_map(maps_arg, vars);
    std::vector<ncmod::AlgElem> point = parse_elements(alg, point_arg);
    std::vector<ncmod::AlgElem> disp = parse_elements(alg, disp_arg);

    std::vector<ncmod::NCPoly> maps;
    for (const auto& [name, poly] : bindings) maps.push_back(poly);
    std::vector<ncmod::AlgElem> result = ncmod::jacobian_apply(maps, point, disp);

    Json results = Json::array();
    for (std::size_t i = 0; i < bindings.size(); ++i)
        results.push_back(Json{{"name", bindings[i].first}, {"value", result[i].to_string()}});
    if (opt.text) {
        for (std::size_t i = 0; i < bindings.size(); ++i)
            std::cout << bindings[i].first << " = " << result[i].to_string() << "\n";
        return;
    }
    print_json(Json{{"algebra", alg->name()}, {"results", results}});
}

void cmd_verify(Options& opt, const std::string& suite, const std::string& algebra,
                std::uint64_t trials, std::uint64_t seed,
                std::optional<std::size_t> dims) {
    std::vector<ncmod::SuiteReport> reports;
    if (suite == "all") {
        reports = ncmod::run_all_suites(algebra, trials, seed, dims);
    } else {
        reports.push_back(ncmod::run_suite(suite, algebra, trials, seed, dims));
    }
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;
    if (!all_passed) opt.exit_code = 1;

    if (opt.text) {
        for (const auto& r : reports)
            std::cout << (r.passed ? "pass " : "FAIL ") << r.suite << " (" << r.algebra
                      << ", trials " << r.trials << ", seed " << r.seed << ", "
                      << r.failures.size() << " failures)\n";
        return;
    }
    if (suite == "all") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(ncmod::report_to_json(r));
        print_json(arr);
    } else {
        print_json(ncmod::report_to_json(reports[0]));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for modules over noncommutative algebras"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--text", opt.text, "human-readable output instead of JSON");

    // algebras list
    auto* algebras = app.add_subcommand("algebras", "builtin algebra registry");
    algebras->require_subcommand(1);
    auto* algebras_list = algebras->add_subcommand("list", "list builtin algebras");
    algebras_list->callback([&] { cmd_algebras_list(opt); });

    // algebra show NAME
    auto* algebra = app.add_subcommand("algebra", "inspect one algebra");
    algebra->require_subcommand(1);
    auto* algebra_show = algebra->add_subcommand("show", "multiplication table and flags");
    std::string show_name;
    algebra_show->add_option("name", show_name, "builtin name or constants file")->required();
    algebra_show->callback([&] { cmd_algebra_show(opt, show_name); });

    // mul
    auto* mul = app.add_subcommand("mul", "multiply two algebra elements");
    std::string mul_algebra, mul_a, mul_b;
    mul->add_option("--algebra", mul_algebra, "algebra name or file")->required();
    mul->add_option("a", mul_a, "left factor, coordinate string")->required();
    mul->add_option("b", mul_b, "right factor, coordinate string")->required();
    mul->callback([&] { cmd_mul(opt, mul_algebra, mul_a, mul_b); });

    // mat
    auto* mat = app.add_subcommand("mat", "matrix operations on matrix files");
    std::string mat_op, mat_a, mat_b;
    mat->add_option("--op", mat_op, "rc|cr|transpose|sum")
        ->required()
        ->check(CLI::IsMember({"rc", "cr", "transpose", "sum"}));
    mat->add_option("a", mat_a, "first matrix file")->required();
    mat->add_option("b", mat_b, "second matrix file (rc/cr/sum)");
    mat->callback([&] { cmd_mat(opt, mat_op, mat_a, mat_b); });

    // coords
    auto* coords = app.add_subcommand("coords", "coordinates of a vector in a basis");
    std::string coords_basis, coords_vector;
    coords->add_option("--basis", coords_basis, "basis file")->required();
    coords->add_option("--vector", coords_vector, "vector file with one vector")->required();
    coords->callback([&] { cmd_coords(opt, coords_basis, coords_vector); });

    // extend
    auto* extend = app.add_subcommand("extend", "scalar extension of a basis");
    std::string extend_basis_path;
    extend->add_option("--basis", extend_basis_path, "basis file")->required();
    extend->callback([&] { cmd_extend(opt, extend_basis_path); });

    // hom apply|sum|compose
    auto* hom = app.add_subcommand("hom", "module homomorphism operations");
    hom->require_subcommand(1);
    auto* hom_apply = hom->add_subcommand("apply", "apply a homomorphism to coordinates");
    std::string hom_apply_path, hom_apply_vector;
    hom_apply->add_option("--hom", hom_apply_path, "hom file")->required();
    hom_apply->add_option("--vector", hom_apply_vector, "elements joined by ';'")->required();
    hom_apply->callback([&] { cmd_hom_apply(opt, hom_apply_path, hom_apply_vector); });

    auto* hom_sum_cmd = hom->add_subcommand("sum", "sum of two homomorphisms");
    std::string hom_sum_a, hom_sum_b;
    hom_sum_cmd->add_option("--a", hom_sum_a, "hom file")->required();
    hom_sum_cmd->add_option("--b", hom_sum_b, "hom file")->required();
    hom_sum_cmd->callback([&] { cmd_hom_sum(opt, hom_sum_a, hom_sum_b); });

    auto* hom_compose_cmd = hom->add_subcommand("compose", "composite outer . inner");
    std::string hom_outer, hom_inner;
    hom_compose_cmd->add_option("--outer", hom_outer, "hom applied second")->required();
    hom_compose_cmd->add_option("--inner", hom_inner, "hom applied first")->required();
    hom_compose_cmd->callback([&] { cmd_hom_compose(opt, hom_outer, hom_inner); });

    // diff
    auto* diff = app.add_subcommand("diff", "partial derivative of a polynomial");
    std::string diff_algebra, diff_vars, diff_expr, diff_wrt;
    diff->add_option("--algebra", diff_algebra, "algebra name (optional context)");
    diff->add_option("--vars", diff_vars, "comma-separated variables")->required();
    diff->add_option("--expr", diff_expr, "polynomial expression")->required();
    diff->add_option("--wrt", diff_wrt, "variable to differentiate by")->required();
    diff->callback([&] { cmd_diff(opt, diff_algebra, diff_vars, diff_expr, diff_wrt); });

    // jacobian
    auto* jac = app.add_subcommand("jacobian", "derivative of a polynomial map");
    std::string jac_algebra, jac_vars, jac_maps, jac_point, jac_disp;
    jac->add_option("--algebra", jac_algebra, "algebra name or file")->required();
    jac->add_option("--vars", jac_vars, "comma-separated variables")->required();
    jac->add_option("--maps", jac_maps, "semicolon-separated 'name = expr' bindings")
        ->required();
    jac->add_option("--point", jac_point, "elements joined by ';'")->required();
    jac->add_option("--displacement", jac_disp, "elements joined by ';'")->required();
    jac->callback(
        [&] { cmd_jacobian(opt, jac_algebra, jac_vars, jac_maps, jac_point, jac_disp); });

    // verify
    auto* verify = app.add_subcommand("verify", "run seeded property suites");
    std::string verify_suite = "all", verify_algebra;
    std::uint64_t verify_trials = 100, verify_seed = 42;
    std::size_t verify_dims = 0;
    verify->add_option("--suite", verify_suite, "suite name or 'all'");
    verify->add_option("--algebra", verify_algebra, "algebra name or file")->required();
    verify->add_option("--trials", verify_trials, "trials per suite");
    auto* seed_opt = verify->add_option("--seed", verify_seed, "prng seed");
    auto* dims_opt = verify->add_option("--dims", verify_dims, "matrix size / module rank");
    verify->callback([&] {
        if (seed_opt->count() == 0) {
            if (const char* env = std::getenv("NCMOD_SEED")) {
                char* end = nullptr;
                unsigned long long v = std::strtoull(env, &end, 10);
                if (end == env || *end != '\0')
                    throw ncmod::DomainError("NCMOD_SEED is not an integer");
                verify_seed = v;
            }
        }
        std::optional<std::size_t> dims;
        if (dims_opt->count() > 0) dims = verify_dims;
        cmd_verify(opt, verify_suite, verify_algebra, verify_trials, verify_seed, dims);
    });

    // Let --text appear after the subcommand as well.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ncmod::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ncmod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return opt.exit_code;
}
