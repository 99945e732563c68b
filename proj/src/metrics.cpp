#include "neofuzzy/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "neofuzzy/errors.hpp"

namespace neofuzzy {

double rmse(std::span<const double> errors) {
    if (errors.empty()) {
        throw std::invalid_argument("rmse of an empty error list");
    }
    double acc = 0.0;
    for (double e : errors) acc += e * e;
    return std::sqrt(acc / static_cast<double>(errors.size()));
}

RunningError::RunningError(double decay) : decay_(decay) {
    if (!(decay > 0.0 && decay < 1.0)) {
        throw std::invalid_argument("tracker decay must lie in (0,1), got " + std::to_string(decay));
    }
}

void RunningError::update(double residual) {
    raw_ = decay_ * raw_ + (1.0 - decay_) * residual * residual;
    decay_pow_ *= decay_;
    ++samples_;
}

double RunningError::value() const {
    if (samples_ == 0) return 0.0;
    return raw_ / (1.0 - decay_pow_);
}

RunningError RunningError::restore(double decay, double raw, std::int64_t samples, double decay_pow) {
    RunningError t(decay);
    t.raw_ = raw;
    t.samples_ = samples;
    t.decay_pow_ = decay_pow;
    return t;
}

std::string report_to_json(const EvalReport& report) {
    nlohmann::ordered_json j;
    j["format"] = "nfcast-report";
    j["version"] = 1;
    j["rmse_train"] = report.rmse_train;
    j["rmse_test"] = report.rmse_test;
    j["rmse_train_denorm"] = report.rmse_train_denorm;
    j["rmse_test_denorm"] = report.rmse_test_denorm;
    j["rmse_train_online"] = report.rmse_train_online;
    j["n_train"] = report.n_train;
    j["n_test"] = report.n_test;
    j["parameter_count"] = report.parameter_count;
    auto log = nlohmann::ordered_json::array();
    for (const auto& ev : report.growth_log) {
        log.push_back({{"sample", ev.sample_index}, {"depth", ev.depth}});
    }
    j["growth_log"] = log;
    j["wall_seconds"] = report.wall_seconds;
    return j.dump(2) + "\n";
}

EvalReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("malformed report: ") + e.what());
    }
    if (j.value("format", "") != "nfcast-report") {
        throw DataError("not a report document");
    }
    EvalReport r;
    r.rmse_train = j.at("rmse_train").get<double>();
    r.rmse_test = j.at("rmse_test").get<double>();
    r.rmse_train_denorm = j.at("rmse_train_denorm").get<double>();
    r.rmse_test_denorm = j.at("rmse_test_denorm").get<double>();
    r.rmse_train_online = j.at("rmse_train_online").get<double>();
    r.n_train = j.at("n_train").get<std::int64_t>();
    r.n_test = j.at("n_test").get<std::int64_t>();
    r.parameter_count = j.at("parameter_count").get<std::int64_t>();
    for (const auto& ev : j.at("growth_log")) {
        r.growth_log.push_back({ev.at("sample").get<std::int64_t>(), ev.at("depth").get<std::int64_t>()});
    }
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
}

std::string render_table(const EvalReport& report) {
    char buf[128];
    std::string out;
    auto row = [&](const char* name, const char* fmt, auto value) {
        std::snprintf(buf, sizeof(buf), "%-22s ", name);
        out += buf;
        std::snprintf(buf, sizeof(buf), fmt, value);
        out += buf;
        out += '\n';
    };
    row("rmse (train)", "%.6f", report.rmse_train);
    row("rmse (test)", "%.6f", report.rmse_test);
    row("rmse denorm (train)", "%.6f", report.rmse_train_denorm);
    row("rmse denorm (test)", "%.6f", report.rmse_test_denorm);
    row("rmse online (train)", "%.6f", report.rmse_train_online);
    row("samples (train)", "%lld", static_cast<long long>(report.n_train));
    row("samples (test)", "%lld", static_cast<long long>(report.n_test));
    row("parameters", "%lld", static_cast<long long>(report.parameter_count));
    row("train time [s]", "%.4f", report.wall_seconds);
    std::string growth = "depth " + std::to_string(report.growth_log.size());
    for (const auto& ev : report.growth_log) {
        growth += " (+1 @ " + std::to_string(ev.sample_index) + ")";
    }
    std::snprintf(buf, sizeof(buf), "%-22s %s\n", "growth", growth.c_str());
    out += buf;
    return out;
}

}  // namespace neofuzzy
