#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace qsf {

/// Outcome of a single verification check.
struct CheckResult {
    std::string name;
    std::string statement;  // what mathematical identity was tested
    std::string status;     // "pass" | "fail" | "budget"
    long residual_count = 0;
    double runtime_ms = 0.0;
    std::string note;       // extra findings (prober variant, dimensions, ...)

    bool passed() const { return status == "pass"; }
};

/// Cooperative per-check time budget.  Exact checks either finish or abort
/// whole; nothing is ever approximated.
class Budget {
public:
    static Budget none() { return Budget(); }
    static Budget seconds(double s) {
        Budget b;
        b.limited_ = true;
        b.deadline_ = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(s));
        return b;
    }

    bool expired() const {
        return limited_ && std::chrono::steady_clock::now() > deadline_;
    }

private:
    bool limited_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Helper assembling a CheckResult from a residual count.
CheckResult make_result(const std::string& name, const std::string& statement,
                        long residuals, double ms, const std::string& note = "");

}  // namespace qsf
