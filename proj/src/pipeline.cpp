#include "argaudit/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "argaudit/errors.hpp"
#include "argaudit/recommender.hpp"

namespace argaudit {

namespace {

std::string read_file(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw Error(std::string("cannot open ") + what + " file: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

std::string topic_stem(std::size_t index) {
    std::string n = std::to_string(index + 1);
    if (n.size() < 2) n = "0" + n;
    return "topic" + n;
}

}  // namespace

AuditOutcome run_audit(const AuditJob& job) {
    Program policy;
    try {
        policy = parse_policy(read_file(job.policy_path, "policy"));
    } catch (const SyntaxError& e) {
        throw SyntaxError(job.policy_path.string() + ": " + e.raw(), e.line(), e.column());
    }

    Dataset data = load_catalog_files(job.movies_path.string(), job.ratings_path.string());

    AuditConfig config = load_config_file(job.config_path.string());
    if (!job.semantics_override.empty())
        config.semantics = semantics_from_name(job.semantics_override);
    validate_config(config, policy);

    SuspectSystem system = make_toy_suspect(data.catalog, data.ratings);
    DescriptionMap describe = make_description_map(data.catalog, config.thresholds);

    InvestigatorAgent investigator;
    investigator.policy = policy;
    investigator.system = &system;
    investigator.catalog = &data.catalog;
    investigator.similarity = config.similarity;
    investigator.strategy = topic_strategy_from(config);

    SuspectAgent suspect;
    suspect.policy = policy;
    suspect.system = &system;
    suspect.catalog = &data.catalog;
    suspect.describe = describe;

    Verdict verdict = interrogate(investigator, suspect, config.semantics);

    std::filesystem::create_directories(job.out_dir);
    std::vector<std::pair<std::string, std::string>> paths;
    for (std::size_t i = 0; i < verdict.topics.size(); ++i) {
        const TopicReport& report = verdict.topics[i];
        std::string stem = topic_stem(i);
        std::string transcript_name = stem + ".transcript.json";
        std::string apx_name = stem + ".apx";
        std::string dot_name = stem + ".dot";

        write_file(job.out_dir / transcript_name,
                   transcript_json(report.dialogue).dump(2) + "\n");
        write_file(job.out_dir / apx_name, emit_apx(report.af.graph));
        Extension focus = grounded(report.af.graph);
        write_file(job.out_dir / dot_name, emit_dot(report.af.graph, &focus));
        paths.emplace_back(transcript_name, apx_name);
    }

    AuditOutcome outcome;
    outcome.verdict = std::move(verdict);
    outcome.report = verdict_json(outcome.verdict, paths);
    outcome.report_path = job.out_dir / "report.json";
    write_file(outcome.report_path, outcome.report.dump(2) + "\n");
    outcome.summary = verdict_summary(outcome.verdict);
    return outcome;
}

}  // namespace argaudit
