// Copyright 2026 The cwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cwsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cwsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::string normalize_key(std::string_view key) {
    std::string out(trim(key));
    std::replace(out.begin(), out.end(), '-', '_');
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string lower(std::string_view s) {
    std::string out(trim(s));
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace

double parse_double(std::string_view text, std::string_view field) {
    const std::string_view t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) {
        throw ConfigError(std::string(field), "expected a number, got '" + std::string(t) + "'");
    }
    return v;
}

std::uint64_t parse_count(std::string_view text, std::string_view field) {
    const std::string_view t = trim(text);
    const auto caret = t.find('^');
    if (caret != std::string_view::npos) {
        const std::uint64_t base = parse_count(t.substr(0, caret), field);
        const std::uint64_t exp = parse_count(t.substr(caret + 1), field);
        if (base != 2 || exp > 62) {
            throw ConfigError(std::string(field), "only powers 2^0 .. 2^62 are accepted");
        }
        return std::uint64_t{1} << exp;
    }
    std::uint64_t v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw ConfigError(std::string(field), "expected a non-negative integer, got '" + std::string(t) + "'");
    }
    return v;
}

std::string_view model_name(MixtureVariant v) { return v == MixtureVariant::Discrete ? "discrete" : "gaussian"; }

std::string_view scheme_name(Scheme s) { return s == Scheme::Local ? "local" : "joint"; }

std::string_view batch_policy_name(BatchPolicy p) { return p == BatchPolicy::PerBasis ? "per-basis" : "per-count"; }

void RunConfig::set(std::string_view raw_key, std::string_view value) {
    const std::string key = normalize_key(raw_key);
    if (key == "q") {
        q = parse_double(value, key);
    } else if (key == "model") {
        const std::string v = lower(value);
        if (v == "discrete") {
            model = MixtureVariant::Discrete;
        } else if (v == "gaussian") {
            model = MixtureVariant::Gaussian;
        } else {
            throw ConfigError(key, "expected 'discrete' or 'gaussian', got '" + v + "'");
        }
    } else if (key == "scheme") {
        const std::string v = lower(value);
        if (v == "local") {
            scheme = Scheme::Local;
        } else if (v == "joint") {
            scheme = Scheme::Joint;
        } else {
            throw ConfigError(key, "expected 'local' or 'joint', got '" + v + "'");
        }
    } else if (key == "sigma") {
        sigma = parse_double(value, key);
    } else if (key == "gamma_over_sigma") {
        gamma_over_sigma = parse_double(value, key);
    } else if (key == "s_over_sigma") {
        s_over_sigma = parse_double(value, key);
    } else if (key == "n") {
        n = parse_count(value, key);
    } else if (key == "seed") {
        seed = parse_count(value, key);
    } else if (key == "batch_policy") {
        std::string v = lower(value);
        std::replace(v.begin(), v.end(), '_', '-');
        if (v == "per-basis") {
            batch_policy = BatchPolicy::PerBasis;
        } else if (v == "per-count") {
            batch_policy = BatchPolicy::PerCount;
        } else {
            throw ConfigError(key, "expected 'per-basis' or 'per-count', got '" + v + "'");
        }
    } else if (key == "threads") {
        const std::uint64_t t = parse_count(value, key);
        if (t > 4096) {
            throw ConfigError(key, "too many threads");
        }
        threads = static_cast<int>(t);
    } else {
        throw ConfigError(key, "unknown configuration key");
    }
}

ExperimentConfig RunConfig::to_experiment() const {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw ConfigError("q", "must lie in [0, 1]");
    }
    if (!(sigma > 0.0)) {
        throw ConfigError("sigma", "must be positive");
    }
    if (!(gamma_over_sigma > 0.0)) {
        throw ConfigError("gamma_over_sigma", "must be positive");
    }
    if (!(s_over_sigma >= 0.0)) {
        throw ConfigError("s_over_sigma", "must be non-negative");
    }
    if (n == 0) {
        throw ConfigError("n", "must be at least 1");
    }
    ExperimentConfig c;
    c.model = {model, q};
    c.noise = {sigma, s_over_sigma * sigma, gamma_over_sigma * sigma};
    c.n = n;
    c.scheme = scheme;
    c.batch_policy = batch_policy;
    c.master_seed = seed;
    c.threads = threads;
    c.validate();
    return c;
}

std::string RunConfig::to_key_value() const {
    std::ostringstream out;
    out << "q = " << format_number(q) << '\n'
        << "model = " << model_name(model) << '\n'
        << "scheme = " << scheme_name(scheme) << '\n'
        << "sigma = " << format_number(sigma) << '\n'
        << "gamma_over_sigma = " << format_number(gamma_over_sigma) << '\n'
        << "s_over_sigma = " << format_number(s_over_sigma) << '\n'
        << "n = " << n << '\n'
        << "seed = " << seed << '\n'
        << "batch_policy = " << batch_policy_name(batch_policy) << '\n'
        << "threads = " << threads << '\n';
    return out.str();
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    RunConfig cfg = base;
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error &e) {
            throw ConfigError("", std::string("malformed JSON: ") + e.what());
        }
        if (!doc.is_object()) {
            throw ConfigError("", "JSON configuration must be an object");
        }
        for (const auto &[key, value] : doc.items()) {
            if (value.is_string()) {
                cfg.set(key, value.get<std::string>());
            } else if (value.is_number_unsigned() || value.is_number_integer()) {
                cfg.set(key, std::to_string(value.get<std::int64_t>()));
            } else if (value.is_number_float()) {
                cfg.set(key, format_number(value.get<double>()));
            } else {
                throw ConfigError(key, "expected a string or number");
            }
        }
        return cfg;
    }

    std::istringstream lines{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::string_view l = line;
        if (const auto hash = l.find('#'); hash != std::string_view::npos) {
            l = l.substr(0, hash);
        }
        l = trim(l);
        if (l.empty()) {
            continue;
        }
        auto sep = l.find('=');
        if (sep == std::string_view::npos) {
            sep = l.find(':');
        }
        if (sep == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        cfg.set(l.substr(0, sep), l.substr(sep + 1));
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path &path, RunConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config", "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), base);
}

std::vector<double> parse_grid(std::string_view text, std::string_view field) {
    const std::string_view t = trim(text);
    const std::string name(field);
    if (t.empty()) {
        throw ConfigError(name, "grid is empty");
    }
    std::vector<double> out;
    if (t.find(':') != std::string_view::npos) {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        while (true) {
            const auto pos = t.find(':', start);
            parts.push_back(t.substr(start, pos - start));
            if (pos == std::string_view::npos) {
                break;
            }
            start = pos + 1;
        }
        if (parts.size() != 3) {
            throw ConfigError(name, "range grid must be 'start:stop:step'");
        }
        const double lo = parse_double(parts[0], field);
        const double hi = parse_double(parts[1], field);
        const double step = parse_double(parts[2], field);
        if (!(step > 0.0) || hi < lo) {
            throw ConfigError(name, "range grid needs step > 0 and stop >= start");
        }
        const auto count = static_cast<std::uint64_t>(std::floor((hi - lo) / step + 0.5)) + 1;
        if (count > 100000) {
            throw ConfigError(name, "range grid is too large");
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            out.push_back(lo + static_cast<double>(i) * step);
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= t.size()) {
        const auto pos = t.find(',', start);
        const std::string_view item = trim(t.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (item.empty()) {
            throw ConfigError(name, "grid has an empty entry");
        }
        out.push_back(parse_double(item, field));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

}  // namespace cwsim
