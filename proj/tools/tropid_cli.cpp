// tropid: command-line front end over the C API.
//
// Exit codes: 0 holds / equal, 1 fails / differs, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropid.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr std::size_t kMaxUnforcedN = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Turns a non-OK status into a UsageError carrying the library message.
void check_status(tropid_status s) {
    if (s != TROPID_OK) throw UsageError(std::string(tropid_status_name(s)) + ": " + tropid_last_error());
}

struct IdentityHandle {
    tropid_identity* raw = nullptr;
    IdentityHandle(const std::string& text, const std::string& alphabet) {
        check_status(tropid_identity_parse(text.c_str(), alphabet.empty() ? nullptr : alphabet.c_str(), &raw));
    }
    ~IdentityHandle() { tropid_identity_free(raw); }
    IdentityHandle(const IdentityHandle&) = delete;
    IdentityHandle& operator=(const IdentityHandle&) = delete;
};

struct PosetHandle {
    tropid_poset* raw = nullptr;
    explicit PosetHandle(const std::string& json) { check_status(tropid_poset_from_json(json.c_str(), &raw)); }
    ~PosetHandle() { tropid_poset_free(raw); }
    PosetHandle(const PosetHandle&) = delete;
    PosetHandle& operator=(const PosetHandle&) = delete;
};

// Takes ownership of a library string and parses it.
Json take_json(char* s) {
    if (!s) return nullptr;
    std::unique_ptr<char, decltype(&tropid_string_free)> guard(s, tropid_string_free);
    return Json::parse(s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void require_small_n(std::size_t n, bool force) {
    if (n > kMaxUnforcedN && !force)
        throw UsageError("n = " + std::to_string(n) + " enumerates |alphabet|^" + std::to_string(n - 1) +
                         " words; pass --force to run it");
}

tropid_model parse_model(const std::string& name) {
    if (name == "utn") return TROPID_MODEL_UTN;
    if (name == "poset") return TROPID_MODEL_POSET;
    if (name == "bicyclic") return TROPID_MODEL_BICYCLIC;
    if (name == "fmim") return TROPID_MODEL_FMIM;
    throw UsageError("unknown model '" + name + "' (expected utn, poset, bicyclic or fmim)");
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_flat_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_object() || (e.is_array() && !std::all_of(e.begin(), e.end(), [](const Json& x) {
                                  return x.is_primitive();
                              })))
            return false;
    return true;
}

// Human rendering of the report: every JSON field, one per line.
void render(std::ostream& os, const Json& v, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    for (const auto& [key, value] : v.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            render(os, value, depth + 1);
        } else if (is_flat_array(value)) {
            os << pad << key << ": " << value.dump() << "\n";
        } else if (value.is_array()) {
            os << pad << key << ":\n";
            std::size_t i = 0;
            for (const auto& e : value) {
                os << pad << "  [" << i++ << "]\n";
                if (e.is_object()) render(os, e, depth + 2);
                else os << pad << "    " << e.dump() << "\n";
            }
        } else {
            os << pad << key << ": " << scalar_text(value) << "\n";
        }
    }
}

struct Report {
    std::string command;
    std::vector<std::string> argv;
    Json result = Json::object();
    int exit_code = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides semigroup identities in upper triangular tropical matrix semigroups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tropid_version()));

    bool json_out = false;
    std::string identity_text, alphabet;
    std::size_t n = 2;
    std::string poset_file, assign_file, model_name;
    bool fast = false, force = false, bicyclic = false, raw = false, essential = false;
    std::size_t trials = 1000, oracle_trials = 0;
    std::uint64_t seed = 1;
    std::int64_t range = 0;
    double bottom_probability = 0.25;

    auto common = [&](CLI::App* sub, bool takes_identity = true) {
        if (takes_identity) {
            sub->add_option("IDENTITY", identity_text, "identity such as \"ab^2a = aba\"")->required();
            sub->add_option("--alphabet", alphabet, "letters of the alphabet (default: those occurring)");
        }
        sub->add_flag("--json", json_out, "print the report as JSON");
    };

    auto* check = app.add_subcommand("check", "decide the identity in UT_n(T) or over a poset; n = 2 decides the bicyclic monoid");
    common(check);
    auto* check_n = check->add_option("--n", n, "matrix dimension (default 2)");
    auto* check_poset = check->add_option("--poset", poset_file, "poset JSON file");
    check_n->excludes(check_poset);
    check->add_flag("--fast-2letter", fast, "two-letter fast path at n = 2");
    check->add_flag("--force", force, "allow n > 4");
    check->add_option("--oracle-trials", oracle_trials, "also run the random oracle");
    check->add_option("--seed", seed, "oracle seed");

    auto* witness = app.add_subcommand("witness", "build a falsifying assignment");
    common(witness);
    auto* witness_n = witness->add_option("--n", n, "UT_n witness");
    auto* witness_b = witness->add_flag("--bicyclic", bicyclic, "bicyclic monoid witness");
    witness_n->excludes(witness_b);
    witness->add_flag("--force", force, "allow n > 4");

    auto* polys = app.add_subcommand("polys", "print the compared polynomial pairs");
    common(polys);
    polys->add_option("--n", n, "matrix dimension")->required();
    auto* polys_raw = polys->add_flag("--raw", raw, "all terms (default)");
    auto* polys_ess = polys->add_flag("--essential", essential, "essential terms only");
    polys_raw->excludes(polys_ess);
    polys->add_flag("--force", force, "allow n > 4");

    auto* eval = app.add_subcommand("eval", "evaluate both sides under an assignment");
    common(eval);
    eval->add_option("--model", model_name, "utn, poset, bicyclic or fmim")->required();
    eval->add_option("--assign", assign_file, "assignment JSON file")->required();
    auto* eval_n = eval->add_option("--n", n, "matrix dimension (default: from the assignment)");
    eval->add_option("--poset", poset_file, "poset JSON file for --model poset");

    auto* oracle = app.add_subcommand("oracle", "search for a falsifier by random evaluation");
    common(oracle);
    oracle->add_option("--model", model_name, "utn, poset, bicyclic or fmim")->required();
    oracle->add_option("--trials", trials, "number of random assignments")->required();
    oracle->add_option("--seed", seed, "random seed")->required();
    oracle->add_option("--range", range, "entries in [-range, range] (default max side length)");
    oracle->add_option("--n", n, "matrix dimension for utn (default 2)");
    oracle->add_option("--poset", poset_file, "poset JSON file for --model poset");
    oracle->add_option("--bottom-probability", bottom_probability, "chance of -inf above the diagonal");

    auto* poset_cmd = app.add_subcommand("poset", "validate a poset file and print its closed order");
    common(poset_cmd, false);
    poset_cmd->add_option("FILE", poset_file, "poset JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report report;
    for (int i = 1; i < argc; ++i) report.argv.emplace_back(argv[i]);
    const auto start = std::chrono::steady_clock::now();

    try {
        if (*check) {
            report.command = "check";
            IdentityHandle id(identity_text, alphabet);
            tropid_check_options opts{fast ? 1 : 0};
            int holds = 0;
            char* out = nullptr;
            std::optional<PosetHandle> poset;
            if (!poset_file.empty()) {
                poset.emplace(read_file(poset_file));
                std::size_t height = 0;
                check_status(tropid_poset_max_chain(poset->raw, &height));
                require_small_n(height, force);
                check_status(tropid_check_poset(id.raw, poset->raw, &opts, &holds, &out));
            } else {
                require_small_n(n, force);
                check_status(tropid_check(id.raw, n, &opts, &holds, &out));
            }
            report.result = take_json(out);
            if (oracle_trials > 0) {
                tropid_oracle_config cfg{poset ? TROPID_MODEL_POSET : TROPID_MODEL_UTN,
                                         n,
                                         poset ? poset->raw : nullptr,
                                         oracle_trials,
                                         0,
                                         0.25,
                                         seed};
                int found = 0;
                char* oj = nullptr;
                check_status(tropid_oracle(id.raw, &cfg, &found, &oj));
                Json o = take_json(oj);
                o["consistent"] = !(found && holds);
                report.result["oracle"] = std::move(o);
                if (found && holds) std::cerr << "tropid: oracle falsifier contradicts the verdict\n";
            }
            report.exit_code = holds ? 0 : 1;
        } else if (*witness) {
            report.command = "witness";
            IdentityHandle id(identity_text, alphabet);
            int found = 0;
            char* out = nullptr;
            if (bicyclic) {
                check_status(tropid_witness_bicyclic(id.raw, &found, &out));
                report.result["model"] = "bicyclic";
            } else {
                require_small_n(n, force);
                check_status(tropid_witness_utn(id.raw, n, &found, &out));
                report.result["model"] = "utn";
                report.result["n"] = n;
            }
            report.result["result"] = found ? "fails" : "holds";
            if (found) report.result["witness"] = take_json(out);
            report.exit_code = found ? 1 : 0;
        } else if (*polys) {
            report.command = "polys";
            require_small_n(n, force);
            IdentityHandle id(identity_text, alphabet);
            char* out = nullptr;
            check_status(tropid_polys(id.raw, n, essential ? TROPID_POLYS_ESSENTIAL : TROPID_POLYS_RAW, &out));
            report.result = take_json(out);
        } else if (*eval) {
            report.command = "eval";
            IdentityHandle id(identity_text, alphabet);
            const tropid_model model = parse_model(model_name);
            std::optional<PosetHandle> poset;
            if (model == TROPID_MODEL_POSET) {
                if (poset_file.empty()) throw UsageError("--model poset needs --poset FILE");
                poset.emplace(read_file(poset_file));
            }
            const std::string assignment = read_file(assign_file);
            int equal = 0;
            char* out = nullptr;
            check_status(tropid_eval(id.raw, model, eval_n->count() ? n : 0, poset ? poset->raw : nullptr,
                                     assignment.c_str(), &equal, &out));
            report.result = take_json(out);
            report.exit_code = equal ? 0 : 1;
        } else if (*oracle) {
            report.command = "oracle";
            IdentityHandle id(identity_text, alphabet);
            const tropid_model model = parse_model(model_name);
            std::optional<PosetHandle> poset;
            if (model == TROPID_MODEL_POSET) {
                if (poset_file.empty()) throw UsageError("--model poset needs --poset FILE");
                poset.emplace(read_file(poset_file));
            }
            tropid_oracle_config cfg{model, n, poset ? poset->raw : nullptr, trials, range, bottom_probability, seed};
            int found = 0;
            char* out = nullptr;
            check_status(tropid_oracle(id.raw, &cfg, &found, &out));
            report.result = take_json(out);
            report.exit_code = found ? 1 : 0;
        } else if (*poset_cmd) {
            report.command = "poset";
            PosetHandle poset(read_file(poset_file));
            char* out = nullptr;
            check_status(tropid_poset_to_json(poset.raw, &out));
            report.result = take_json(out);
        }
    } catch (const UsageError& e) {
        std::cerr << "tropid: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "tropid: malformed library output: " << e.what() << "\n";
        return 2;
    }

    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json doc{{"tool", "tropid"},
             {"version", tropid_version()},
             {"schema", kSchemaVersion},
             {"command", Json{{"name", report.command}, {"argv", report.argv}}},
             {"result", report.result},
             {"exit_code", report.exit_code},
             {"elapsed_ms", elapsed}};
    if (json_out) std::cout << doc.dump(2) << "\n";
    else render(std::cout, doc, 0);
    return report.exit_code;
}
