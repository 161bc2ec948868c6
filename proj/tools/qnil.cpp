#include "qnil/acceptance.hpp"
#include "qnil/classify.hpp"
#include "qnil/decompose.hpp"
#include "qnil/errors.hpp"
#include "qnil/generate.hpp"
#include "qnil/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using qnil::io::Json;

enum Exit { Ok = 0, Failure = 1, BadInput = 2, No = 3, NotDivision = 4 };

struct Options {
    std::string input;
    std::string output;
    std::string decomposition;
    std::string algebra = "-1,-1";
    std::string format = "pretty";
    std::uint64_t seed = 1;
    std::optional<std::int64_t> height;
    std::optional<std::size_t> search_budget;
    std::string kind = "generic-trace-zero";
    std::size_t n = 3;
    std::string lambda;
    std::string supertrace;
    bool quick = false;
};

std::pair<std::string, std::string> split_pair(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw qnil::ParseError(std::string(what) + " must look like x,y: " + s);
    return {s.substr(0, comma), s.substr(comma + 1)};
}

qnil::AlgebraParams algebra_of(const Options& o) {
    auto [a, b] = split_pair(o.algebra, "--algebra");
    return qnil::AlgebraParams::create(qnil::Rational::parse(a), qnil::Rational::parse(b));
}

qnil::SearchConfig config_of(const Options& o) {
    qnil::SearchConfig cfg;
    if (o.height) cfg.vector_height = *o.height;
    if (o.search_budget) {
        cfg.perturbation_budget = *o.search_budget;
        cfg.cyclic_budget = *o.search_budget;
    }
    return cfg;
}

Json read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return qnil::io::parse(ss.str());
    }
    return qnil::io::read_file(path);
}

qnil::QMatrix read_matrix(const Options& o, const std::string& path) {
    // the --algebra flag only applies to documents without their own algebra field
    Json j = read_input(path);
    return qnil::io::matrix_from_json(j, j.contains("algebra") ? std::nullopt : std::optional(algebra_of(o)));
}

void emit(const Options& o, const Json& j) {
    if (o.output.empty() || o.output == "-") std::cout << j.dump(2) << '\n';
    else qnil::io::write_file(o.output, j);
}

std::string summary_line(const qnil::Decision& d) {
    std::ostringstream os;
    os << to_string(d.classification.verdict);
    if (d.classification.type_ii) os << ", supertrace=" << d.classification.type_ii->supertrace.to_string();
    os << ", decision=" << (d.answer ? "YES" : "NO");
    return os.str();
}

void print_decision(const Options& o, const qnil::Decision& d) {
    if (o.format == "json") {
        std::cout << qnil::io::to_json(d).dump(2) << '\n';
        return;
    }
    std::cout << summary_line(d) << '\n';
    std::cout << "reason: " << to_string(d.reason) << '\n';
    if (!d.detail.empty()) std::cout << "detail: " << d.detail << '\n';
}

int cmd_classify(const Options& o) {
    qnil::QMatrix m = read_matrix(o, o.input);
    auto d = qnil::is_sum_of_two_nilpotents(m, config_of(o));
    print_decision(o, d);
    if (!o.output.empty()) qnil::io::write_file(o.output, qnil::io::to_json(d));
    return d.answer ? Ok : No;
}

int cmd_decompose(const Options& o) {
    qnil::QMatrix m = read_matrix(o, o.input);
    auto cfg = config_of(o);
    auto d = qnil::is_sum_of_two_nilpotents(m, cfg);
    if (!d.answer) {
        std::cerr << summary_line(d) << " (" << to_string(d.reason) << ")\n";
        std::cerr << "witness: " << qnil::io::to_json(d).value("witness", Json::object()).dump() << '\n';
        return No;
    }
    auto dec = qnil::decompose_two_nilpotents(m, cfg);
    Json j = qnil::io::to_json(dec);
    if (o.output.empty() || o.output == "-") {
        std::cout << j.dump(2) << '\n';
    } else {
        qnil::io::write_file(o.output, j);
        std::cout << "wrote verified decomposition of a " << m.rows() << "x" << m.cols() << " matrix to " << o.output
                  << '\n';
    }
    return Ok;
}

int cmd_check(const Options& o) {
    qnil::QMatrix m = read_matrix(o, o.input);
    auto dec = qnil::io::decomposition_from_json(qnil::io::read_file(o.decomposition));
    bool ok = qnil::verify_decomposition(m, dec.N1, dec.N2);
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? Ok : Failure;
}

int cmd_gen(const Options& o) {
    qnil::InstanceSpec spec;
    spec.algebra = algebra_of(o);
    spec.n = o.n;
    spec.kind = qnil::parse_instance_kind(o.kind);
    spec.seed = o.seed;
    if (o.height) spec.height = *o.height;
    if (!o.lambda.empty()) spec.lambda = qnil::Rational::parse(o.lambda);
    if (!o.supertrace.empty()) {
        auto [t, n] = split_pair(o.supertrace, "--supertrace");
        spec.supertrace = std::pair(qnil::Rational::parse(t), qnil::Rational::parse(n));
    }
    emit(o, qnil::io::to_json(qnil::generate_instance(spec)));
    return Ok;
}

int cmd_selftest(const Options& o) {
    qnil::AcceptanceOptions opt;
    opt.quick = o.quick;
    opt.cfg = config_of(o);
    if (o.seed != 1) opt.seed = o.seed;
    bool all = true;
    qnil::run_acceptance(opt, [&](const qnil::CriterionResult& r) {
        std::cout << qnil::format_result(r) << std::endl;
        all = all && r.passed;
    });
    return all ? Ok : Failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qnil: sums of two nilpotent matrices over rational quaternion division algebras"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "algebra parameters a,b for inputs without an algebra field")
            ->capture_default_str();
        sub->add_option("--height", o.height, "coordinate height bound (search vectors, or generated entries)");
        sub->add_option("--search-budget", o.search_budget, "number of candidates tried by the constructive searches");
        sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
        sub->add_option("-o,--output", o.output, "output file (default stdout)");
    };

    auto* classify = app.add_subcommand("classify", "classify a matrix and decide whether it is a sum of two nilpotents");
    classify->add_option("-i,--input", o.input, "matrix JSON file, - for stdin");
    classify->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();
    common(classify);

    auto* decompose = app.add_subcommand("decompose", "write two nilpotent summands with a similarity witness");
    decompose->add_option("-i,--input", o.input, "matrix JSON file, - for stdin");
    decompose->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    common(decompose);

    auto* check = app.add_subcommand("check", "verify a decomposition against a matrix");
    check->add_option("-i,--input", o.input, "matrix JSON file")->required();
    check->add_option("-d,--decomposition", o.decomposition, "decomposition JSON file")->required();
    common(check);

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--kind", o.kind, "generic-trace-zero, type-I, type-II, type-III or random")->capture_default_str();
    gen->add_option("--n", o.n, "matrix size")->capture_default_str();
    gen->add_option("--lambda", o.lambda, "scalar part for type-I and type-II");
    gen->add_option("--supertrace", o.supertrace, "trace,norm of the type-II supertrace class (default zero)");
    common(gen);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_flag("--quick", o.quick, "smaller sample counts, skipping the exhaustive finite check");
    common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (*classify) return cmd_classify(o);
        if (*decompose) return cmd_decompose(o);
        if (*check) return cmd_check(o);
        if (*gen) return cmd_gen(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const qnil::NonDivisionAlgebra& e) {
        std::cerr << "error: " << e.what() << '\n';
        return NotDivision;
    } catch (const qnil::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return BadInput;
    } catch (const qnil::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const qnil::DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Failure;
    }
    return Failure;
}
