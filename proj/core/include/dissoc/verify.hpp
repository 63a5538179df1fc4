#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace dissoc {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Warn, Skipped };
std::string verdict_name(Verdict verdict);

/// Expected values for every registered check, kept as data.
///
/// Layout: {"manifest_version": "...", "theorems": {"<id>": {"title": "...",
/// "expected": {"<check>": value, ...}}}}. Check names are JSON pointers
/// relative to "expected" (for example "/ex_L5/8").
class Manifest {
public:
    static Manifest parse(const std::string& text);
    static Manifest load(const std::string& path);
    /// The manifest shipped with the build.
    static Manifest load_default();
    static std::string default_path();

    const std::string& version() const { return version_; }
    bool has(const std::string& id) const;
    std::string title(const std::string& id) const;
    /// Expected value at pointer `check` for theorem `id`, if present.
    std::optional<Json> expected(const std::string& id, const std::string& check) const;

private:
    std::string version_;
    Json theorems_;
};

struct VerifyParams {
    /// Largest order used by exhaustive enumeration.
    int max_n = 8;
    int jobs = 1;
    /// Restricts order-indexed instances to this n when set.
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> m;
};

struct CheckRecord {
    std::string check;
    Json expected;
    Json observed;
    bool ok = false;
    /// A failed soft check downgrades the verdict to WARN instead of FAIL.
    bool soft = false;
};

struct Report {
    std::string id;
    std::string title;
    Json params;
    std::vector<CheckRecord> checks;
    /// Instance counts and other observations that carry no expected value.
    Json details = Json::object();
    std::vector<std::string> notes;
    Verdict verdict = Verdict::Skipped;
    double elapsed_ms = 0.0;

    Json to_json() const;
};

/// Registered theorem ids in registry order.
const std::vector<std::string>& registered_theorems();
bool is_registered(const std::string& id);

/// Runs the finite checks registered for `id`. Throws InvalidArgument for
/// an unknown id or infeasible parameters.
Report verify(const std::string& id, const VerifyParams& params, const Manifest& manifest);

/// True when `observed` equals `expected`: exact for integers, strings and
/// booleans, within kCompareTolerance (relative) for reals, elementwise for
/// arrays and objects.
bool json_matches(const Json& expected, const Json& observed);

}  // namespace dissoc
