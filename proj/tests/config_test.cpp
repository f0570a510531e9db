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

#include <functional>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

using namespace cwsim;

namespace {

std::string field_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const ConfigError &e) {
        return e.field();
    }
    return "<no error>";
}

}  // namespace

TEST(config, defaults) {
    const RunConfig c;
    const ExperimentConfig e = c.to_experiment();
    EXPECT_EQ(e.model.q, 1.0);
    EXPECT_EQ(e.model.variant, MixtureVariant::Discrete);
    EXPECT_EQ(e.scheme, Scheme::Local);
    EXPECT_EQ(e.n, std::uint64_t{1} << 20);
    EXPECT_EQ(e.master_seed, 1u);
    EXPECT_EQ(e.batch_policy, BatchPolicy::PerBasis);
    EXPECT_EQ(e.noise, NoiseParams::with_defaults(1.0));
}

TEST(config, key_value_text) {
    const RunConfig c = parse_config(R"(
# witness run
q = 0.4
model: gaussian
scheme = JOINT
gamma-over-sigma = 1.1   # trailing comment
n = 2^14
seed = 99
batch_policy = per_count
threads = 2
)");
    EXPECT_DOUBLE_EQ(c.q, 0.4);
    EXPECT_EQ(c.model, MixtureVariant::Gaussian);
    EXPECT_EQ(c.scheme, Scheme::Joint);
    EXPECT_DOUBLE_EQ(c.gamma_over_sigma, 1.1);
    EXPECT_EQ(c.n, 16384u);
    EXPECT_EQ(c.seed, 99u);
    EXPECT_EQ(c.batch_policy, BatchPolicy::PerCount);
    EXPECT_EQ(c.threads, 2);
}

TEST(config, json_text) {
    const RunConfig c = parse_config(R"({"q": 0.25, "model": "discrete", "sigma": 2, "n": "2^10", "s_over_sigma": 0.5})");
    EXPECT_DOUBLE_EQ(c.q, 0.25);
    EXPECT_DOUBLE_EQ(c.sigma, 2.0);
    EXPECT_EQ(c.n, 1024u);
    const ExperimentConfig e = c.to_experiment();
    EXPECT_DOUBLE_EQ(e.noise.s, 1.0);
    EXPECT_DOUBLE_EQ(e.noise.gamma, 2.0);
}

TEST(config, base_is_overlaid) {
    RunConfig base;
    base.seed = 5;
    base.q = 0.3;
    const RunConfig c = parse_config("q = 0.9\n", base);
    EXPECT_EQ(c.seed, 5u);
    EXPECT_DOUBLE_EQ(c.q, 0.9);
}

TEST(config, key_value_round_trip) {
    RunConfig c;
    c.q = 1.0 / 3.0;
    c.model = MixtureVariant::Gaussian;
    c.gamma_over_sigma = 0.85;
    c.n = 12345;
    c.seed = 0xFFFFFFFFFFFFFFFFULL;
    c.batch_policy = BatchPolicy::PerCount;
    const RunConfig back = parse_config(c.to_key_value());
    EXPECT_EQ(back.q, c.q);
    EXPECT_EQ(back.model, c.model);
    EXPECT_EQ(back.gamma_over_sigma, c.gamma_over_sigma);
    EXPECT_EQ(back.n, c.n);
    EXPECT_EQ(back.seed, c.seed);
    EXPECT_EQ(back.batch_policy, c.batch_policy);
    EXPECT_EQ(back.to_key_value(), c.to_key_value());
}

TEST(config, field_level_errors) {
    EXPECT_EQ(field_of([] { parse_config("q = abc"); }), "q");
    EXPECT_EQ(field_of([] { parse_config("model = quantum"); }), "model");
    EXPECT_EQ(field_of([] { parse_config("scheme = both"); }), "scheme");
    EXPECT_EQ(field_of([] { parse_config("n = -4"); }), "n");
    EXPECT_EQ(field_of([] { parse_config("n = 3^4"); }), "n");
    EXPECT_EQ(field_of([] { parse_config("batch_policy = sometimes"); }), "batch_policy");
    EXPECT_EQ(field_of([] { parse_config("colour = red"); }), "colour");
    EXPECT_EQ(field_of([] { parse_config("just words"); }), "");
    EXPECT_EQ(field_of([] { parse_config("{\"q\": [1]}"); }), "q");
    EXPECT_EQ(field_of([] { parse_config("{\"q\": 0.5"); }), "");
    EXPECT_EQ(field_of([] { load_config("/nonexistent/witness.cfg"); }), "config");
}

TEST(config, range_errors_surface_on_conversion) {
    const auto convert = [](const char *text) { return [text] { parse_config(text).to_experiment(); }; };
    EXPECT_EQ(field_of(convert("q = 1.5")), "q");
    EXPECT_EQ(field_of(convert("q = -0.1")), "q");
    EXPECT_EQ(field_of(convert("sigma = 0")), "sigma");
    EXPECT_EQ(field_of(convert("gamma_over_sigma = -1")), "gamma_over_sigma");
    EXPECT_EQ(field_of(convert("n = 0")), "n");
    EXPECT_EQ(field_of(convert("q = nan")), "q");
}

TEST(config, load_from_file) {
    const auto path = std::filesystem::temp_directory_path() / "cwsim_config_test.cfg";
    {
        std::ofstream out(path);
        out << "q = 0.2\nseed = 17\n";
    }
    const RunConfig c = load_config(path);
    std::filesystem::remove(path);
    EXPECT_DOUBLE_EQ(c.q, 0.2);
    EXPECT_EQ(c.seed, 17u);
}

TEST(config, grids) {
    EXPECT_EQ(parse_grid("0, 0.2,1", "grid"), (std::vector<double>{0.0, 0.2, 1.0}));
    const std::vector<double> r = parse_grid("0.5:1.25:0.05", "grid");
    ASSERT_EQ(r.size(), 16u);
    EXPECT_DOUBLE_EQ(r.front(), 0.5);
    EXPECT_NEAR(r.back(), 1.25, 1e-12);
    EXPECT_EQ(parse_grid("1:1:0.1", "grid"), (std::vector<double>{1.0}));

    EXPECT_EQ(field_of([] { parse_grid("", "grid"); }), "grid");
    EXPECT_EQ(field_of([] { parse_grid("  ", "grid"); }), "grid");
    EXPECT_EQ(field_of([] { parse_grid("0,,1", "grid"); }), "grid");
    EXPECT_EQ(field_of([] { parse_grid("1:0:0.1", "grid"); }), "grid");
    EXPECT_EQ(field_of([] { parse_grid("0:1:0", "grid"); }), "grid");
    EXPECT_EQ(field_of([] { parse_grid("0:1", "grid"); }), "grid");
    EXPECT_EQ(field_of([] { parse_grid("a,b", "grid"); }), "grid");
}

TEST(config, counts) {
    EXPECT_EQ(parse_count("2^20", "n"), std::uint64_t{1} << 20);
    EXPECT_EQ(parse_count(" 42 ", "n"), 42u);
    EXPECT_THROW(parse_count("2^63", "n"), ConfigError);
    EXPECT_THROW(parse_count("1.5", "n"), ConfigError);
    EXPECT_DOUBLE_EQ(parse_double("1e-3", "x"), 0.001);
    EXPECT_THROW(parse_double("1,5", "x"), ConfigError);
}

TEST(config, names) {
    EXPECT_EQ(model_name(MixtureVariant::Gaussian), "gaussian");
    EXPECT_EQ(scheme_name(Scheme::Joint), "joint");
    EXPECT_EQ(batch_policy_name(BatchPolicy::PerCount), "per-count");
}
