// argaudit: audits an opaque recommender-style system for policy compliance
// by running investigator/suspect dialogues and applying argumentation
// semantics to the asserted arguments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "argaudit/af.hpp"
#include "argaudit/config.hpp"
#include "argaudit/errors.hpp"
#include "argaudit/pipeline.hpp"

namespace {

constexpr int kExitPolicyError = 2;
constexpr int kExitDataError = 3;
constexpr int kExitConfigError = 4;
constexpr int kExitSolverError = 5;
constexpr int kExitOverflow = 6;

int fail(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return code;
}

int run_audit_cmd(const argaudit::AuditJob& job) {
    try {
        argaudit::AuditOutcome outcome = argaudit::run_audit(job);
        std::cout << outcome.summary << "\n";
        return 0;
    } catch (const argaudit::SyntaxError& e) {
        return fail(kExitPolicyError, e.what());
    } catch (const argaudit::ConfigError& e) {
        return fail(kExitConfigError, e.what());
    } catch (const argaudit::FormatError& e) {
        return fail(kExitDataError, e.what());
    } catch (const argaudit::DuplicateKeyError& e) {
        return fail(kExitDataError, e.what());
    } catch (const argaudit::EmptyCatalogError& e) {
        return fail(kExitDataError, e.what());
    } catch (const std::exception& e) {
        return fail(kExitSolverError, e.what());
    }
}

int run_solve_cmd(const std::string& af_path, const std::string& semantics_name,
                  const std::string& dot_path) {
    std::ifstream in(af_path);
    if (!in) return fail(kExitPolicyError, "cannot open " + af_path);
    std::stringstream buffer;
    buffer << in.rdbuf();

    try {
        argaudit::ArgGraph graph = argaudit::parse_apx(buffer.str());
        argaudit::Semantics semantics = argaudit::semantics_from_name(semantics_name);
        std::vector<argaudit::Extension> extensions = argaudit::solve(graph, semantics);
        for (const argaudit::Extension& e : extensions)
            std::cout << argaudit::to_string(e) << "\n";
        if (!dot_path.empty()) {
            std::ofstream dot(dot_path, std::ios::binary);
            if (!dot) return fail(kExitSolverError, "cannot write " + dot_path);
            const argaudit::Extension* focus =
                extensions.empty() ? nullptr : &extensions.front();
            dot << argaudit::emit_dot(graph, focus);
        }
        return 0;
    } catch (const argaudit::SyntaxError& e) {
        return fail(kExitPolicyError, e.what());
    } catch (const argaudit::UndeclaredArgumentError& e) {
        return fail(kExitPolicyError, e.what());
    } catch (const argaudit::ExtensionOverflowError& e) {
        return fail(kExitOverflow, e.what());
    } catch (const std::exception& e) {
        return fail(kExitSolverError, e.what());
    }
}

int run_topics_cmd(const std::string& policy_path, const std::string& config_path) {
    try {
        std::ifstream in(policy_path);
        if (!in) return fail(kExitPolicyError, "cannot open " + policy_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        argaudit::Program policy = argaudit::parse_policy(buffer.str());

        argaudit::AuditConfig config = argaudit::load_config_file(config_path);
        argaudit::validate_config(config, policy);

        argaudit::InvestigatorAgent investigator;
        investigator.policy = policy;
        investigator.strategy = argaudit::topic_strategy_from(config);
        std::vector<argaudit::Topic> topics = argaudit::generate_topics(investigator);

        for (std::size_t i = 0; i < topics.size(); ++i) {
            const argaudit::Topic& t = topics[i];
            std::cout << (i + 1) << ". " << t.label << "\n";
            std::cout << "   class: " << t.input_class.to_string() << "\n";
            std::cout << "   T_P: {";
            for (std::size_t k = 0; k < t.descriptors.size(); ++k) {
                if (k > 0) std::cout << ", ";
                std::cout << t.descriptors[k].to_string();
            }
            std::cout << "}\n";
        }
        return 0;
    } catch (const argaudit::SyntaxError& e) {
        return fail(kExitPolicyError, e.what());
    } catch (const argaudit::ConfigError& e) {
        return fail(kExitConfigError, e.what());
    } catch (const std::exception& e) {
        return fail(kExitSolverError, e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dialogue-based compliance auditing for opaque systems"};
    app.require_subcommand(1);

    argaudit::AuditJob job;
    std::string policy_path, movies_path, ratings_path, config_path, out_dir;
    std::string semantics_name, af_path, dot_path;

    CLI::App* audit = app.add_subcommand("audit", "Run a full audit and write a report");
    audit->add_option("--policy", policy_path, "Policy file (.pol)")->required();
    audit->add_option("--movies", movies_path, "movies.csv")->required();
    audit->add_option("--ratings", ratings_path, "ratings.csv")->required();
    audit->add_option("--config", config_path, "Audit configuration")->required();
    audit->add_option("--semantics", semantics_name,
                      "grounded|stable|complete|preferred (overrides the config)");
    audit->add_option("--out", out_dir, "Output directory")->required();

    CLI::App* solve = app.add_subcommand("solve", "Solve an APX argumentation graph");
    solve->add_option("--af", af_path, "APX file")->required();
    solve->add_option("--semantics", semantics_name, "grounded|stable|complete|preferred")
        ->required();
    solve->add_option("--dot", dot_path, "Write a DOT rendering here");

    CLI::App* topics = app.add_subcommand("topics", "List the generated topics");
    topics->add_option("--policy", policy_path, "Policy file (.pol)")->required();
    topics->add_option("--config", config_path, "Audit configuration")->required();

    CLI11_PARSE(app, argc, argv);

    if (audit->parsed()) {
        job.policy_path = policy_path;
        job.movies_path = movies_path;
        job.ratings_path = ratings_path;
        job.config_path = config_path;
        job.semantics_override = semantics_name;
        job.out_dir = out_dir;
        return run_audit_cmd(job);
    }
    if (solve->parsed()) return run_solve_cmd(af_path, semantics_name, dot_path);
    return run_topics_cmd(policy_path, config_path);
}
