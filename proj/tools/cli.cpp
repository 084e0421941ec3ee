#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "entcat/catalysis.hpp"
#include "entcat/construction.hpp"
#include "entcat/majorization.hpp"
#include "entcat/oracle.hpp"
#include "entcat/report.hpp"

namespace entcat::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Values gathered from flags and, when given, a request document.
struct Request {
    std::string request_path;
    std::string source;
    std::string target;
    std::string p;
    std::string catalyst;
    std::string m0;
    std::string M0;
    std::string mu;
    std::vector<std::string> spectra;
    long denominator = 1000;
    bool denominator_set = false;
    bool endpoints = false;
};

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_rational(item));
    }
    return out;
}

std::string join_json_list(const Json& j, const char* key) {
    if (!j.is_array()) {
        throw InputError(std::string("request: '") + key + "' must be an array of rational strings");
    }
    std::string out;
    for (const auto& item : j) {
        if (!item.is_string()) {
            throw InputError(std::string("request: '") + key + "' entries must be strings");
        }
        if (!out.empty()) out += ',';
        out += item.get<std::string>();
    }
    return out;
}

void merge_request_document(Request& req, std::istream& in) {
    if (req.request_path.empty()) {
        return;
    }
    Json doc;
    try {
        if (req.request_path == "-") {
            doc = Json::parse(in);
        } else {
            std::ifstream file(req.request_path);
            if (!file) {
                throw InputError("request: cannot open '" + req.request_path + "'");
            }
            doc = Json::parse(file);
        }
    } catch (const Json::exception& e) {
        throw InputError(std::string("request: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("request: document must be a JSON object");
    }
    auto fill_list = [&](const char* key, std::string& dst) {
        if (dst.empty() && doc.contains(key)) dst = join_json_list(doc[key], key);
    };
    auto fill_scalar = [&](const char* key, std::string& dst) {
        if (dst.empty() && doc.contains(key)) {
            if (!doc[key].is_string()) {
                throw InputError(std::string("request: '") + key + "' must be a rational string");
            }
            dst = doc[key].get<std::string>();
        }
    };
    fill_list("source", req.source);
    fill_list("target", req.target);
    fill_list("catalyst", req.catalyst);
    fill_scalar("p", req.p);
    fill_scalar("m0", req.m0);
    fill_scalar("M0", req.M0);
    fill_scalar("mu", req.mu);
    if (req.spectra.empty() && doc.contains("spectra")) {
        for (const auto& s : doc["spectra"]) req.spectra.push_back(join_json_list(s, "spectra"));
    }
    if (!req.denominator_set && doc.contains("grid_denominator")) {
        if (!doc["grid_denominator"].is_number_integer()) {
            throw InputError("request: 'grid_denominator' must be a positive integer");
        }
        req.denominator = doc["grid_denominator"].get<long>();
    }
}

Spectrum4 require_spectrum(const std::string& text, const char* name) {
    if (text.empty()) {
        throw InputError(std::string("missing ") + name + " spectrum");
    }
    return make_spectrum(parse_list(text));
}

Rational require_rational(const std::string& text, const char* name) {
    if (text.empty()) {
        throw InputError(std::string("missing ") + name);
    }
    return parse_rational(text);
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void cmd_check_locc(const Request& req, std::ostream& out) {
    const auto source = require_spectrum(req.source, "source");
    const auto target = require_spectrum(req.target, "target");
    const auto violation = first_majorization_violation(source.values(), target.values());
    print(out, Json{
        {"command", "check-locc"},
        {"possible", !violation.has_value()},
        {"partial_sums_source", exact_array(partial_sums(source.values()).sums)},
        {"partial_sums_target", exact_array(partial_sums(target.values()).sums)},
        {"first_violated_index", violation ? Json(*violation) : Json(nullptr)},
    });
}

void cmd_analyze(const Request& req, std::ostream& out) {
    const auto source = require_spectrum(req.source, "source");
    const auto target = require_spectrum(req.target, "target");
    print(out, Json{
        {"command", "analyze"},
        {"source", exact_array(source.values())},
        {"target", exact_array(target.values())},
        {"report", to_json(analyze(source, target))},
    });
}

void cmd_validate(const Request& req, std::ostream& out) {
    const auto source = require_spectrum(req.source, "source");
    const auto target = require_spectrum(req.target, "target");
    if (req.catalyst.empty() == req.p.empty()) {
        throw InputError("validate: give exactly one of --catalyst or --p");
    }
    const auto catalyst = req.catalyst.empty() ? two_qubit_catalyst(parse_rational(req.p))
                                               : make_catalyst(parse_list(req.catalyst));

    const bool oracle = oracle_valid_catalyst(source, target, catalyst);
    std::optional<bool> theorem;
    if (catalyst.size() == 2) {
        theorem = is_valid_catalyst(source, target, catalyst[0]);
    }
    const bool agree = !theorem || *theorem == oracle;
    print(out, Json{
        {"command", "validate"},
        {"catalyst", exact_array(catalyst.values())},
        {"theorem_applicable", theorem.has_value()},
        {"theorem", theorem ? Json(*theorem) : Json(nullptr)},
        {"oracle", oracle},
        {"agree", agree},
    });
    if (!agree) {
        throw InconsistencyError("validate: theorem and oracle disagree");
    }
}

void cmd_sweep(const Request& req, std::ostream& out) {
    const auto source = require_spectrum(req.source, "source");
    const auto target = require_spectrum(req.target, "target");
    if (req.denominator < 1) {
        throw InputError("sweep: grid denominator must be positive");
    }
    std::optional<Interval> interval;
    if (req.endpoints) {
        interval = analyze(source, target).p_interval;
    }
    const auto grid = default_grid(req.denominator, interval);
    const auto points = sweep(source, target, grid);
    write_sweep_csv(out, points);
}

void cmd_construct(const Request& req, std::ostream& out) {
    const Rational m0 = require_rational(req.m0, "m0");
    const Rational M0 = require_rational(req.M0, "M0");
    const auto result = req.mu.empty() ? construct_states(m0, M0)
                                       : construct_states(m0, M0, parse_rational(req.mu));
    const auto eps = std::get<EpsilonTriple>(epsilon_decompose(result.source, result.target));
    const auto m = compute_m(result.source, eps);
    const auto M = compute_M(result.source, eps);
    const bool verified = m == m0 && M == M0;
    print(out, Json{
        {"command", "construct"},
        {"m0", to_json(m0)},
        {"M0", to_json(M0)},
        {"result", to_json(result)},
        {"eps", to_json(eps)},
        {"recomputed", Json{{"m", to_json(m)}, {"M", to_json(M)}}},
        {"verified", verified},
    });
    if (!verified) {
        throw InconsistencyError("construct: recomputed (m, M) differs from the request");
    }
}

void cmd_lorenz(const Request& req, std::ostream& out) {
    if (req.spectra.empty()) {
        throw InputError("lorenz: at least one --spectrum is required");
    }
    bool first = true;
    for (const auto& text : req.spectra) {
        // validates nonnegativity and normalization
        const auto values = make_catalyst(parse_list(text));
        if (!first) out << '\n';
        first = false;
        write_lorenz_csv(out, lorenz_points(values.values()));
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact LOCC and two-qubit catalysis analysis for four-level bipartite pure states", "entcat"};
    app.require_subcommand(1);
    Request req;

    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--source", req.source, "Source Schmidt coefficients, comma separated");
        sub->add_option("--target", req.target, "Target Schmidt coefficients, comma separated");
    };
    auto add_request = [&](CLI::App* sub) {
        sub->add_option("--request", req.request_path, "JSON request document ('-' for stdin)");
    };

    auto* check = app.add_subcommand("check-locc", "Test plain LOCC convertibility (majorization)");
    add_pair(check);
    add_request(check);

    auto* analyze_cmd = app.add_subcommand("analyze", "Decide two-qubit catalyzability and the catalyst interval");
    add_pair(analyze_cmd);
    add_request(analyze_cmd);

    auto* validate = app.add_subcommand("validate", "Check one catalyst with the theorem and the brute-force oracle");
    add_pair(validate);
    add_request(validate);
    validate->add_option("--catalyst", req.catalyst, "Catalyst coefficients, comma separated");
    validate->add_option("--p", req.p, "Two-qubit catalyst parameter p");

    auto* sweep_cmd = app.add_subcommand("sweep", "Oracle verdicts over a grid of p in [1/2, 1] as CSV");
    add_pair(sweep_cmd);
    add_request(sweep_cmd);
    sweep_cmd->add_option("--denominator,-d", req.denominator, "Grid denominator d (grid k/d)")
        ->each([&](const std::string&) { req.denominator_set = true; });
    sweep_cmd->add_flag("--endpoints", req.endpoints, "Merge the exact feasible-interval endpoints into the grid");

    auto* construct = app.add_subcommand("construct", "Build a state pair with prescribed m and M");
    add_request(construct);
    construct->add_option("--m0", req.m0, "Target lower bound m0 > 0");
    construct->add_option("--M0", req.M0, "Target upper bound 0 < M0 < 1");
    construct->add_option("--mu", req.mu, "Pin the perturbation size instead of choosing it");

    auto* lorenz = app.add_subcommand("lorenz", "Lorenz-curve points as CSV, one block per spectrum");
    add_request(lorenz);
    lorenz->add_option("--spectrum", req.spectra, "Spectrum, comma separated (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kEvaluated;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kEvaluated;
    } catch (const CLI::ParseError& e) {
        err << "entcat: " << e.what() << '\n';
        return kInputError;
    }

    try {
        merge_request_document(req, in);
        if (check->parsed()) cmd_check_locc(req, out);
        else if (analyze_cmd->parsed()) cmd_analyze(req, out);
        else if (validate->parsed()) cmd_validate(req, out);
        else if (sweep_cmd->parsed()) cmd_sweep(req, out);
        else if (construct->parsed()) cmd_construct(req, out);
        else if (lorenz->parsed()) cmd_lorenz(req, out);
    } catch (const InconsistencyError& e) {
        err << "entcat: internal consistency failure: " << e.what() << '\n';
        return kInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "entcat: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << "entcat: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "entcat: internal error: " << e.what() << '\n';
        return kInconsistent;
    }
    return kEvaluated;
}

}  // namespace entcat::cli
