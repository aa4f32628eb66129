#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "exactcat/serialize.hpp"

namespace exactcat {

/// One counterexample, with enough embedded data (matrices, dims) to rebuild
/// the offending objects and replay the failed check independently.
struct Witness {
    std::string label;
    Json data;
};

/// Result of one named property check: pass/fail, how many cases were
/// examined, and the witnesses on failure.
struct CheckBlock {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;
    std::vector<Witness> witnesses;

    void fail(std::string label, Json data) {
        passed = false;
        witnesses.push_back(Witness{std::move(label), std::move(data)});
    }

    Json to_json() const {
        Json w = Json::array();
        for (const Witness& x : witnesses)
            w.push_back(Json{{"label", x.label}, {"data", x.data}});
        return Json{{"check", name}, {"passed", passed}, {"cases", cases},
                    {"witnesses", std::move(w)}};
    }
};

/// Ordered bundle of check blocks produced by one verification pass.
/// Blocks live in a deque so references handed out by block() stay valid
/// while later blocks are appended.
struct AxiomReport {
    std::deque<CheckBlock> blocks;

    CheckBlock& block(const std::string& name) {
        for (CheckBlock& b : blocks)
            if (b.name == name) return b;
        blocks.push_back(CheckBlock{name, true, 0, {}});
        return blocks.back();
    }

    bool all_passed() const {
        for (const CheckBlock& b : blocks)
            if (!b.passed) return false;
        return true;
    }

    std::int64_t total_cases() const {
        std::int64_t n = 0;
        for (const CheckBlock& b : blocks) n += b.cases;
        return n;
    }

    Json to_json() const {
        Json out = Json::array();
        for (const CheckBlock& b : blocks) out.push_back(b.to_json());
        return out;
    }

    void merge(AxiomReport other) {
        for (CheckBlock& b : other.blocks) blocks.push_back(std::move(b));
    }
};

}  // namespace exactcat
