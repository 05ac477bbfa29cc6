#pragma once

#include <string>
#include <vector>

namespace hodge {

/** @brief One named check with its outcome and a human-readable note. */
struct Clause {
    std::string name;
    bool ok = true;
    std::string message;
};

/** @brief Ordered list of clauses; passes when every clause passes. */
struct Report {
    std::vector<Clause> clauses;

    void add(std::string name, bool ok, std::string message = {}) {
        clauses.push_back({std::move(name), ok, std::move(message)});
    }
    bool ok() const {
        for (const auto& c : clauses)
            if (!c.ok) return false;
        return true;
    }
    /** @brief Outcome of the named clause (false when absent). */
    bool passed(const std::string& name) const {
        for (const auto& c : clauses)
            if (c.name == name) return c.ok;
        return false;
    }
    /** @brief Name of the first failing clause, or empty. */
    std::string first_failure() const {
        for (const auto& c : clauses)
            if (!c.ok) return c.name;
        return {};
    }
};

}  // namespace hodge
