#include "argaudit/investigation.hpp"

#include <algorithm>
#include <set>

#include "argaudit/errors.hpp"

namespace argaudit {

std::string to_string(AcceptanceStatus s) {
    switch (s) {
        case AcceptanceStatus::sceptical: return "sceptical";
        case AcceptanceStatus::credulous: return "credulous";
        case AcceptanceStatus::rejected: return "rejected";
    }
    return "?";
}

std::string to_string(VerdictValue v) {
    switch (v) {
        case VerdictValue::strong_belief: return "strong_belief";
        case VerdictValue::credulous_belief: return "credulous_belief";
        case VerdictValue::strong_disbelief: return "strong_disbelief";
        case VerdictValue::mixed: return "mixed";
    }
    return "?";
}

namespace {

std::vector<Atom> descriptor_set_for(const Clause& clause, const TopicStrategy& strategy) {
    if (strategy.tp_mode == TpMode::head_only) return {clause.head};
    auto it = strategy.descriptor_groups.find(clause.head);
    if (it == strategy.descriptor_groups.end())
        throw MissingDescriptorGroupError("no descriptor group for clause head " +
                                          clause.head.to_string());
    std::vector<Atom> members;
    for (const auto& [atom, group] : strategy.descriptor_groups) {
        if (group == it->second) members.push_back(atom);
    }
    return members;
}

std::string subset_label(int clause_index, const std::vector<Atom>& atoms) {
    std::string label = "c" + std::to_string(clause_index) + ": ";
    if (atoms.empty()) return label + "(all inputs)";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0) label += " & ";
        label += atoms[i].to_string();
    }
    return label;
}

// k-combinations of indices 0..n-1 in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Topic> generate_topics(const InvestigatorAgent& agent) {
    std::vector<Topic> topics;
    int clause_index = 0;
    for (const Clause& clause : agent.policy.clauses()) {
        ++clause_index;
        std::vector<Atom> descriptors = descriptor_set_for(clause, agent.strategy);
        for (const Atom& atom : clause.body) {
            if (!agent.strategy.bindings.contains(atom))
                throw MissingBindingError("no binding for body atom " + atom.to_string());
        }
        const std::vector<Atom>& body = clause.body;  // sorted canonical order
        if (body.empty()) {
            topics.push_back(make_topic(InputClassSpec{}, descriptors,
                                        subset_label(clause_index, {})));
            continue;
        }
        int n = static_cast<int>(body.size());
        for (int k = 1; k <= n; ++k) {
            for_each_combination(n, k, [&](const std::vector<int>& idx) {
                std::vector<Atom> atoms;
                InputClassSpec cls;
                for (int i : idx) {
                    atoms.push_back(body[i]);
                    cls.predicates.push_back(agent.strategy.bindings.at(body[i]));
                }
                topics.push_back(make_topic(std::move(cls), descriptors,
                                            subset_label(clause_index, atoms)));
            });
        }
    }
    return topics;
}

TopicStatus classify_topic(const std::vector<Extension>& extensions,
                           const std::map<std::string, Atom>& conclusion_of,
                           const Topic& topic) {
    TopicStatus status;
    if (extensions.empty()) {
        status.value = AcceptanceStatus::rejected;
        status.missing_somewhere = topic.descriptors;
        status.missing_everywhere = topic.descriptors;
        return status;
    }

    std::set<Atom> everywhere;
    std::set<Atom> anywhere;
    bool first = true;
    for (const Extension& e : extensions) {
        std::set<Atom> concluded;
        for (const std::string& id : e.members) {
            auto it = conclusion_of.find(id);
            if (it != conclusion_of.end()) concluded.insert(it->second);
        }
        anywhere.insert(concluded.begin(), concluded.end());
        if (first) {
            everywhere = std::move(concluded);
            first = false;
        } else {
            std::erase_if(everywhere,
                          [&](const Atom& a) { return !concluded.contains(a); });
        }
    }

    for (const Atom& a : topic.descriptors) {
        if (!everywhere.contains(a)) status.missing_somewhere.push_back(a);
        if (!anywhere.contains(a)) status.missing_everywhere.push_back(a);
    }
    if (status.missing_somewhere.empty()) status.value = AcceptanceStatus::sceptical;
    else if (status.missing_everywhere.empty()) status.value = AcceptanceStatus::credulous;
    else status.value = AcceptanceStatus::rejected;
    return status;
}

namespace {

TopicReport audit_topic(const InvestigatorAgent& investigator, const SuspectAgent& suspect,
                        const Topic& topic, Semantics semantics) {
    TopicReport report;
    report.topic = topic;
    TopicInputs inputs = enumerate_topic_inputs(*investigator.system, topic,
                                                *investigator.catalog,
                                                investigator.strategy.sampling);
    report.sampled = inputs.sampled.size();
    report.matching = inputs.matching;
    report.dialogue =
        run_dialogue(investigator.id, suspect.id, topic, *suspect.system, suspect.describe,
                     *investigator.catalog, investigator.strategy.sampling);
    report.af = extract_af(report.dialogue, investigator.similarity, *investigator.catalog);
    report.extensions = solve(report.af.graph, semantics);
    report.status = classify_topic(report.extensions, report.af.graph.conclusion_of, topic);
    std::set<Atom> topic_atoms(topic.descriptors.begin(), topic.descriptors.end());
    report.consistent = is_consistent(investigator.policy, topic_atoms);
    return report;
}

}  // namespace

ArguesStatus argues_status(const SuspectAgent& suspect,
                           const InvestigatorAgent& investigator, const Topic& topic,
                           Semantics semantics) {
    TopicReport report = audit_topic(investigator, suspect, topic, semantics);
    switch (report.status.value) {
        case AcceptanceStatus::sceptical: return ArguesStatus::sceptical;
        case AcceptanceStatus::credulous: return ArguesStatus::credulous;
        case AcceptanceStatus::rejected: return ArguesStatus::empty;
    }
    return ArguesStatus::empty;
}

NonMonotonicityReport check_nonmonotonicity(
    const std::vector<std::pair<Topic, AcceptanceStatus>>& statuses) {
    NonMonotonicityReport report;
    auto witness = [](const std::pair<Topic, AcceptanceStatus>& a,
                      const std::pair<Topic, AcceptanceStatus>& b) {
        return NonMonotonicityReport::Witness{a.first.label, to_string(a.second),
                                              b.first.label, to_string(b.second)};
    };

    auto descriptor_subset = [](const Topic& a, const Topic& b) {
        // strict subset; descriptor lists are sorted and unique
        return a.descriptors.size() < b.descriptors.size() &&
               std::includes(b.descriptors.begin(), b.descriptors.end(),
                             a.descriptors.begin(), a.descriptors.end());
    };
    auto predicate_set = [](const Topic& t) {
        return std::set<FeaturePredicate>(t.input_class.predicates.begin(),
                                          t.input_class.predicates.end());
    };

    for (std::size_t i = 0; i < statuses.size(); ++i) {
        for (std::size_t j = i + 1; j < statuses.size(); ++j) {
            const auto& a = statuses[i];
            const auto& b = statuses[j];
            if (a.second == b.second) continue;

            if (descriptor_subset(a.first, b.first))
                report.descriptor_mode.push_back(witness(a, b));
            else if (descriptor_subset(b.first, a.first))
                report.descriptor_mode.push_back(witness(b, a));

            if (a.first.descriptors == b.first.descriptors) {
                std::set<FeaturePredicate> pa = predicate_set(a.first);
                std::set<FeaturePredicate> pb = predicate_set(b.first);
                if (pa.size() < pb.size() &&
                    std::includes(pb.begin(), pb.end(), pa.begin(), pa.end())) {
                    report.input_refinement_mode.push_back(witness(a, b));
                } else if (pb.size() < pa.size() &&
                           std::includes(pa.begin(), pa.end(), pb.begin(), pb.end())) {
                    report.input_refinement_mode.push_back(witness(b, a));
                }
            }
        }
    }
    report.non_monotonic = !report.descriptor_mode.empty();
    return report;
}

Verdict interrogate(const InvestigatorAgent& investigator, const SuspectAgent& suspect,
                    Semantics semantics) {
    Verdict verdict;
    verdict.semantics = semantics;
    std::vector<Topic> topics = generate_topics(investigator);

    bool all_sceptical = true, all_credulous = true, all_rejected = true,
         all_consistent = true;
    std::vector<std::pair<Topic, AcceptanceStatus>> statuses;
    for (const Topic& topic : topics) {
        TopicReport report = audit_topic(investigator, suspect, topic, semantics);
        AcceptanceStatus s = report.status.value;
        all_sceptical &= s == AcceptanceStatus::sceptical;
        all_credulous &= s != AcceptanceStatus::rejected;
        all_rejected &= s == AcceptanceStatus::rejected;
        all_consistent &= report.consistent;
        statuses.emplace_back(topic, s);
        verdict.topics.push_back(std::move(report));
    }

    if (all_sceptical && all_consistent) verdict.value = VerdictValue::strong_belief;
    else if (all_credulous && all_consistent) verdict.value = VerdictValue::credulous_belief;
    else if (all_rejected && all_consistent) verdict.value = VerdictValue::strong_disbelief;
    else verdict.value = VerdictValue::mixed;

    verdict.non_monotonicity = check_nonmonotonicity(statuses);
    return verdict;
}

nlohmann::ordered_json verdict_json(
    const Verdict& verdict, const std::vector<std::pair<std::string, std::string>>& paths) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(verdict.value);
    j["semantics"] = semantics_name(verdict.semantics);

    nlohmann::ordered_json topics = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < verdict.topics.size(); ++i) {
        const TopicReport& r = verdict.topics[i];
        nlohmann::ordered_json tj;
        tj["label"] = r.topic.label;
        tj["status"] = to_string(r.status.value);
        tj["consistent"] = r.consistent;
        tj["num_arguments"] = r.af.graph.size();
        tj["num_extensions"] = r.extensions.size();
        nlohmann::ordered_json coverage;
        coverage["sampled"] = r.sampled;
        coverage["matching"] = r.matching;
        tj["coverage"] = std::move(coverage);
        tj["transcript"] = i < paths.size() ? paths[i].first : "";
        tj["af"] = i < paths.size() ? paths[i].second : "";
        topics.push_back(std::move(tj));
    }
    j["topics"] = std::move(topics);

    auto witnesses = [](const std::vector<NonMonotonicityReport::Witness>& list) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& w : list) {
            nlohmann::ordered_json wj;
            wj["topic1"] = w.topic1;
            wj["status1"] = w.status1;
            wj["topic2"] = w.topic2;
            wj["status2"] = w.status2;
            out.push_back(std::move(wj));
        }
        return out;
    };
    nlohmann::ordered_json nm;
    nm["descriptor_mode"] = witnesses(verdict.non_monotonicity.descriptor_mode);
    nm["input_refinement_mode"] = witnesses(verdict.non_monotonicity.input_refinement_mode);
    j["non_monotonicity"] = std::move(nm);
    return j;
}

std::string verdict_summary(const Verdict& verdict) {
    int sceptical = 0, credulous = 0, rejected = 0, inconsistent = 0;
    for (const TopicReport& r : verdict.topics) {
        switch (r.status.value) {
            case AcceptanceStatus::sceptical: ++sceptical; break;
            case AcceptanceStatus::credulous: ++credulous; break;
            case AcceptanceStatus::rejected: ++rejected; break;
        }
        if (!r.consistent) ++inconsistent;
    }
    std::string out = "verdict: " + to_string(verdict.value) + " (" +
                      semantics_name(verdict.semantics) + "; topics: " +
                      std::to_string(verdict.topics.size()) + ", sceptical: " +
                      std::to_string(sceptical) + ", credulous: " +
                      std::to_string(credulous) + ", rejected: " +
                      std::to_string(rejected);
    if (inconsistent > 0) out += ", inconsistent: " + std::to_string(inconsistent);
    out += "; refinement witnesses: " +
           std::to_string(verdict.non_monotonicity.input_refinement_mode.size()) + ")";
    return out;
}

}  // namespace argaudit
