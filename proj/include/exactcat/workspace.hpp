#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/config.hpp"
#include "exactcat/exact_structure.hpp"
#include "exactcat/serialize.hpp"

namespace exactcat {

/// 64-bit FNV-1a of the raw workspace bytes; reports carry it so a result can
/// be tied to the exact input file.
inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

namespace detail {

/// Structure rules are small predicate trees over the three terms of a
/// sequence.  Leaves: always, split, dims_le, dims_eq.  Nodes: and, or, not.
struct Rule {
    enum class Kind { always, split, dims_le, dims_eq, conj, disj, neg };
    enum class Term { sub, middle, quotient };

    Kind kind = Kind::always;
    Term term = Term::middle;
    std::vector<int> bound;
    std::vector<std::shared_ptr<const Rule>> args;
};

inline std::shared_ptr<const Rule> parse_rule(const Json& j, const Quiver& q,
                                              const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw workspace_error(where + ": rule must be an object with a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    auto rule = std::make_shared<Rule>();

    auto expect_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : j.items()) {
            bool ok = key == "kind";
            for (const char* a : allowed) ok = ok || key == a;
            if (!ok) throw workspace_error(where + ": unknown rule key '" + key + "'");
        }
    };

    if (kind == "always" || kind == "split") {
        expect_keys({});
        rule->kind = kind == "always" ? Rule::Kind::always : Rule::Kind::split;
    } else if (kind == "dims_le" || kind == "dims_eq") {
        expect_keys({"term", "bound"});
        rule->kind = kind == "dims_le" ? Rule::Kind::dims_le : Rule::Kind::dims_eq;
        if (!j.contains("term") || !j.at("term").is_string())
            throw workspace_error(where + ": '" + kind + "' needs a string 'term'");
        const std::string term = j.at("term").get<std::string>();
        if (term == "sub")
            rule->term = Rule::Term::sub;
        else if (term == "middle")
            rule->term = Rule::Term::middle;
        else if (term == "quotient")
            rule->term = Rule::Term::quotient;
        else
            throw workspace_error(where + ": term must be sub|middle|quotient, got '" + term +
                                  "'");
        if (!j.contains("bound") || !j.at("bound").is_array())
            throw workspace_error(where + ": '" + kind + "' needs an array 'bound'");
        for (const Json& b : j.at("bound")) {
            if (!b.is_number_integer() || b.get<int>() < 0)
                throw workspace_error(where + ": bound entries must be nonnegative integers");
            rule->bound.push_back(b.get<int>());
        }
        if (static_cast<int>(rule->bound.size()) != q.vertex_count())
            throw workspace_error(where + ": bound has " + std::to_string(rule->bound.size()) +
                                  " entries, quiver has " + std::to_string(q.vertex_count()) +
                                  " vertices");
    } else if (kind == "and" || kind == "or") {
        expect_keys({"args"});
        rule->kind = kind == "and" ? Rule::Kind::conj : Rule::Kind::disj;
        if (!j.contains("args") || !j.at("args").is_array() || j.at("args").empty())
            throw workspace_error(where + ": '" + kind + "' needs a nonempty array 'args'");
        int idx = 0;
        for (const Json& a : j.at("args"))
            rule->args.push_back(parse_rule(a, q, where + ".args[" + std::to_string(idx++) + "]"));
    } else if (kind == "not") {
        expect_keys({"arg"});
        rule->kind = Rule::Kind::neg;
        if (!j.contains("arg"))
            throw workspace_error(where + ": 'not' needs an 'arg' rule");
        rule->args.push_back(parse_rule(j.at("arg"), q, where + ".arg"));
    } else {
        throw workspace_error(where + ": unknown rule kind '" + kind + "'");
    }
    return rule;
}

inline bool eval_rule(const Rule& r, const ShortExactSequence& s) {
    switch (r.kind) {
        case Rule::Kind::always:
            return true;
        case Rule::Kind::split:
            return sequence_splits(s);
        case Rule::Kind::dims_le:
        case Rule::Kind::dims_eq: {
            const Representation& x = r.term == Rule::Term::sub        ? s.sub()
                                      : r.term == Rule::Term::quotient ? s.quotient()
                                                                       : s.middle();
            if (r.kind == Rule::Kind::dims_eq) return x.dims() == r.bound;
            for (size_t v = 0; v < r.bound.size(); ++v)
                if (x.dims()[v] > r.bound[v]) return false;
            return true;
        }
        case Rule::Kind::conj:
            for (const auto& a : r.args)
                if (!eval_rule(*a, s)) return false;
            return true;
        case Rule::Kind::disj:
            for (const auto& a : r.args)
                if (eval_rule(*a, s)) return true;
            return false;
        case Rule::Kind::neg:
            return !eval_rule(*r.args[0], s);
    }
    throw internal_error("eval_rule: unhandled kind");
}

}  // namespace detail

/// A loaded workspace: ambient (field, quiver), budgets, named objects, the
/// corpus the property checks sweep, and named custom structure rules.  The
/// structures "all" and "split" always exist and cannot be redefined.
struct Workspace {
    std::string path;
    std::string digest;
    int version;
    PrimeField field;
    Quiver quiver;
    Budgets budgets;
    std::vector<std::pair<std::string, Representation>> reps;  // file order
    std::vector<std::string> corpus_names;
    std::vector<std::pair<std::string, Json>> structure_rules;  // file order

    const Representation& rep(const std::string& name) const {
        for (const auto& [n, r] : reps)
            if (n == name) return r;
        throw workspace_error("no representation named '" + name + "' in workspace (have: " +
                              known_names() + ")");
    }

    bool has_rep(const std::string& name) const {
        for (const auto& [n, r] : reps)
            if (n == name) return true;
        return false;
    }

    std::vector<Representation> corpus() const {
        std::vector<Representation> out;
        out.reserve(corpus_names.size());
        for (const std::string& n : corpus_names) out.push_back(rep(n));
        return out;
    }

    std::vector<std::string> structure_names() const {
        std::vector<std::string> out{"all", "split"};
        for (const auto& [n, r] : structure_rules) out.push_back(n);
        return out;
    }

    bool has_structure(const std::string& name) const {
        if (name == "all" || name == "split") return true;
        for (const auto& [n, r] : structure_rules)
            if (n == name) return true;
        return false;
    }

    /// Build the named structure.  Custom rules construct permissively; run
    /// check_axioms to learn what a broken rule violates.
    ExactStructure structure(const std::string& name) const {
        if (name == "all") return e_all(quiver, field);
        if (name == "split") return e_split(quiver, field);
        for (const auto& [n, rule_json] : structure_rules)
            if (n == name) {
                auto rule = detail::parse_rule(rule_json, quiver, "structures." + name);
                return custom_structure(quiver, field, name,
                                        [rule](const ShortExactSequence& s) {
                                            return detail::eval_rule(*rule, s);
                                        });
            }
        std::string names;
        for (const std::string& n : structure_names()) names += (names.empty() ? "" : ", ") + n;
        throw workspace_error("no structure named '" + name + "' in workspace (have: " + names +
                              ")");
    }

private:
    std::string known_names() const {
        std::string names;
        for (const auto& [n, r] : reps) names += (names.empty() ? "" : ", ") + n;
        return names;
    }
};

/// Command-line overrides applied on top of the workspace's budgets block
/// (before representations are validated against the dimension gate).
struct BudgetOverrides {
    std::optional<int> max_total_dim;
    std::optional<double> enumeration;
    std::optional<std::int64_t> iso_search;
};

inline Workspace load_workspace(const std::string& path,
                                const BudgetOverrides& overrides = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw workspace_error("cannot open workspace file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const nlohmann::json::exception& err) {
        throw workspace_error("workspace is not valid JSON: " + std::string(err.what()));
    }
    if (!j.is_object()) throw workspace_error("workspace root must be a JSON object");

    auto require = [&](const char* key) -> const Json& {
        if (!j.contains(key))
            throw workspace_error(std::string("workspace is missing required key '") + key + "'");
        return j.at(key);
    };

    const Json& jversion = require("version");
    if (!jversion.is_number_integer() || jversion.get<int>() != 1)
        throw workspace_error("unsupported workspace version (expected 1)");

    const Json& jfield = require("field");
    if (!jfield.is_number_integer())
        throw workspace_error("'field' must be a prime integer");
    PrimeField field = [&] {
        try {
            return PrimeField(jfield.get<int>());
        } catch (const invalid_input& err) {
            throw workspace_error(std::string("bad 'field': ") + err.what());
        }
    }();

    const Json& jq = require("quiver");
    if (!jq.is_object() || !jq.contains("vertices") || !jq.contains("arrows"))
        throw workspace_error("'quiver' must be an object with 'vertices' and 'arrows'");
    Quiver quiver = [&] {
        try {
            std::vector<std::pair<int, int>> arrows;
            for (const Json& a : jq.at("arrows")) {
                if (!a.is_array() || a.size() != 2)
                    throw invalid_input("each arrow must be a [source, target] pair");
                arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
            }
            return Quiver(jq.at("vertices").get<int>(), std::move(arrows));
        } catch (const invalid_input& err) {
            throw workspace_error(std::string("bad 'quiver': ") + err.what());
        }
    }();

    Budgets budgets = kDefaultBudgets;
    if (j.contains("budgets")) {
        const Json& jb = j.at("budgets");
        if (!jb.is_object()) throw workspace_error("'budgets' must be an object");
        for (const auto& [key, value] : jb.items()) {
            if (key == "max_total_dim") {
                if (!value.is_number_integer() || value.get<int>() < 0)
                    throw workspace_error("budgets.max_total_dim must be a nonnegative integer");
                budgets.max_total_dim = value.get<int>();
            } else if (key == "enumeration") {
                if (!value.is_number() || value.get<double>() <= 0)
                    throw workspace_error("budgets.enumeration must be a positive number");
                budgets.enumeration = value.get<double>();
            } else if (key == "iso_search") {
                if (!value.is_number_integer() || value.get<std::int64_t>() <= 0)
                    throw workspace_error("budgets.iso_search must be a positive integer");
                budgets.iso_search = value.get<std::int64_t>();
            } else {
                throw workspace_error("unknown budgets key '" + key + "'");
            }
        }
    }

    if (overrides.max_total_dim) {
        if (*overrides.max_total_dim < 0)
            throw workspace_error("max_total_dim override must be nonnegative");
        budgets.max_total_dim = *overrides.max_total_dim;
    }
    if (overrides.enumeration) {
        if (*overrides.enumeration <= 0)
            throw workspace_error("enumeration budget override must be positive");
        budgets.enumeration = *overrides.enumeration;
    }
    if (overrides.iso_search) {
        if (*overrides.iso_search <= 0)
            throw workspace_error("iso_search budget override must be positive");
        budgets.iso_search = *overrides.iso_search;
    }

    Workspace ws{path, fnv1a_digest(bytes), 1, field, std::move(quiver), budgets, {}, {}, {}};

    const Json& jreps = require("representations");
    if (!jreps.is_object() || jreps.empty())
        throw workspace_error("'representations' must be a nonempty object");
    for (const auto& [name, body] : jreps.items()) {
        if (ws.has_rep(name)) throw workspace_error("duplicate representation name '" + name + "'");
        try {
            ws.reps.emplace_back(name, representation_from_json(ws.quiver, ws.field, body,
                                                                budgets.max_total_dim));
        } catch (const invalid_input& err) {
            throw workspace_error("bad representation '" + name + "': " + err.what());
        } catch (const budget_exceeded& err) {
            throw workspace_error("representation '" + name + "' exceeds the dimension budget: " +
                                  err.what());
        } catch (const nlohmann::json::exception& err) {
            throw workspace_error("bad representation '" + name + "': " + std::string(err.what()));
        }
    }

    const Json& jcorpus = require("corpus");
    if (!jcorpus.is_array() || jcorpus.empty())
        throw workspace_error("'corpus' must be a nonempty array of representation names");
    for (const Json& n : jcorpus) {
        if (!n.is_string()) throw workspace_error("corpus entries must be strings");
        const std::string name = n.get<std::string>();
        if (!ws.has_rep(name))
            throw workspace_error("corpus names unknown representation '" + name + "'");
        ws.corpus_names.push_back(name);
    }

    if (j.contains("structures")) {
        const Json& js = j.at("structures");
        if (!js.is_object()) throw workspace_error("'structures' must be an object");
        for (const auto& [name, rule] : js.items()) {
            if (name == "all" || name == "split")
                throw workspace_error("structure name '" + name + "' is reserved");
            if (ws.has_structure(name))
                throw workspace_error("duplicate structure name '" + name + "'");
            detail::parse_rule(rule, ws.quiver, "structures." + name);  // validate now
            ws.structure_rules.emplace_back(name, rule);
        }
    }

    for (const auto& [key, value] : j.items()) {
        static const char* known[] = {"version", "field",  "quiver",
                                      "budgets", "representations", "corpus",
                                      "structures"};
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw workspace_error("unknown workspace key '" + key + "'");
    }

    return ws;
}

}  // namespace exactcat
