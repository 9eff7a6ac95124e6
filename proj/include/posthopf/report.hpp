#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace posthopf {

/// One nonzero residual: which identity failed, at which basis indices
/// (followed by the output component), and the exact residual value.
struct AxiomEntry {
    std::string axiom;
    std::vector<std::size_t> indices;
    std::string residual;
};

/// Outcome of an axiom suite. Only nonzero residuals are stored; `checked`
/// counts every residual component that was evaluated.
struct AxiomReport {
    std::vector<AxiomEntry> failures;
    std::size_t checked = 0;

    bool passed() const { return failures.empty(); }

    /// First failure for a given axiom id, or nullptr.
    const AxiomEntry* first_failure(std::string_view axiom) const {
        for (const auto& f : failures)
            if (f.axiom == axiom) return &f;
        return nullptr;
    }

    void merge(const AxiomReport& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        checked += other.checked;
    }
};

/// Collects residuals from the generic checkers into an AxiomReport.
template <class R>
struct ReportSink {
    AxiomReport* report;
    void operator()(std::string_view axiom, const std::vector<std::size_t>& indices, const R& residual) const {
        ++report->checked;
        if (!residual.is_zero()) report->failures.push_back({std::string(axiom), indices, residual.to_string()});
    }
};

}  // namespace posthopf
