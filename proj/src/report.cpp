#include "qsf/report.hpp"

namespace qsf {

CheckResult make_result(const std::string& name, const std::string& statement,
                        long residuals, double ms, const std::string& note) {
    CheckResult r;
    r.name = name;
    r.statement = statement;
    r.status = residuals == 0 ? "pass" : "fail";
    r.residual_count = residuals;
    r.runtime_ms = ms;
    r.note = note;
    return r;
}

}  // namespace qsf
