#include "fclda/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fclda {

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string_view f = comma == std::string_view::npos ? line.substr(start)
                                                             : line.substr(start, comma - start);
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r'))
            f.remove_suffix(1);
        out.emplace_back(f);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_number(const std::string& field, std::size_t row, const std::string& column) {
    try {
        std::size_t used = 0;
        double v = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument("trailing characters");
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("csv: cannot parse '" + field + "' as a number at data row " +
                                 std::to_string(row) + ", column '" + column + "'");
    }
}

void note_label(Dataset& ds, const std::string& label) {
    if (std::find(ds.class_order.begin(), ds.class_order.end(), label) == ds.class_order.end())
        ds.class_order.push_back(label);
}

}  // namespace

Dataset parse_csv(std::string_view text, const std::string& label_column) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string_view::npos)
        lines.pop_back();
    if (lines.empty()) throw std::runtime_error("csv: empty input");

    const auto header = split_fields(lines.front());
    std::size_t label_idx = header.size();
    Dataset ds;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == label_column)
            label_idx = i;
        else
            ds.feature_names.push_back(header[i]);
    }
    if (label_idx == header.size())
        throw std::runtime_error("csv: label column '" + label_column + "' not found in header");

    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (lines[r].find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const auto fields = split_fields(lines[r]);
        if (fields.size() != header.size())
            throw std::runtime_error("csv: data row " + std::to_string(r) + " has " +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(header.size()));
        std::vector<double> x;
        x.reserve(header.size() - 1);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i == label_idx) continue;
            x.push_back(parse_number(fields[i], r, header[i]));
        }
        ds.samples.push_back(std::move(x));
        ds.labels.push_back(fields[label_idx]);
        note_label(ds, ds.labels.back());
    }
    if (ds.samples.empty()) throw std::runtime_error("csv: no data rows");
    return ds;
}

Dataset load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), label_column);
}

std::string to_csv(const Dataset& ds) {
    std::ostringstream out;
    for (const auto& name : ds.feature_names) out << name << ',';
    out << "label\n";
    char num[40];
    for (std::size_t r = 0; r < ds.size(); ++r) {
        for (double v : ds.samples[r]) {
            std::snprintf(num, sizeof num, "%.17g", v);
            out << num << ',';
        }
        out << ds.labels[r] << '\n';
    }
    return out.str();
}

void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << to_csv(ds);
}

Dataset select_binary(const Dataset& ds, const std::string& class_a, const std::string& class_b,
                      const std::vector<std::string>& features) {
    std::vector<std::size_t> cols;
    cols.reserve(features.size());
    for (const auto& f : features) {
        auto it = std::find(ds.feature_names.begin(), ds.feature_names.end(), f);
        if (it == ds.feature_names.end())
            throw std::runtime_error("select_binary: unknown feature '" + f + "'");
        cols.push_back(static_cast<std::size_t>(it - ds.feature_names.begin()));
    }
    if (cols.empty()) throw std::runtime_error("select_binary: no features selected");

    Dataset out;
    out.feature_names = features;
    out.class_order = {class_a, class_b};
    std::size_t count_a = 0, count_b = 0;
    for (std::size_t r = 0; r < ds.size(); ++r) {
        const std::string& lab = ds.labels[r];
        if (lab != class_a && lab != class_b) continue;
        (lab == class_a ? count_a : count_b) += 1;
        std::vector<double> x;
        x.reserve(cols.size());
        for (std::size_t c : cols) x.push_back(ds.samples[r][c]);
        out.samples.push_back(std::move(x));
        out.labels.push_back(lab);
    }
    if (count_a == 0) throw std::runtime_error("select_binary: no rows labeled '" + class_a + "'");
    if (count_b == 0) throw std::runtime_error("select_binary: no rows labeled '" + class_b + "'");
    return out;
}

ReflectedDataset augment_reflect(const Dataset& ds) {
    if (ds.class_order.size() != 2)
        throw std::runtime_error("augment_reflect: dataset must have exactly two classes, has " +
                                 std::to_string(ds.class_order.size()));
    ReflectedDataset rd;
    rd.originals = ds;
    rd.reflected.reserve(ds.size());
    rd.class_of.reserve(ds.size());
    for (std::size_t r = 0; r < ds.size(); ++r) {
        const bool first = ds.labels[r] == ds.class_order[0];
        const double sign = first ? 1.0 : -1.0;
        std::vector<double> y;
        y.reserve(ds.samples[r].size() + 1);
        y.push_back(sign);
        for (double v : ds.samples[r]) y.push_back(sign * v);
        rd.reflected.push_back(std::move(y));
        rd.class_of.push_back(first ? 1 : 2);
    }
    return rd;
}

namespace {

// Standard normals from explicit 53-bit uniforms via Box-Muller.
// std::normal_distribution is implementation-defined, which would break the
// bit-identical-rerun contract across standard libraries.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

Dataset synthetic_two_gaussians(std::size_t n_per_class, const std::vector<double>& mean1,
                                const std::vector<double>& mean2, double stddev,
                                std::uint64_t seed) {
    if (n_per_class == 0) throw std::invalid_argument("synthetic: n_per_class must be >= 1");
    if (!(stddev > 0.0)) throw std::invalid_argument("synthetic: stddev must be positive");
    if (mean1.size() != mean2.size() || mean1.empty())
        throw std::invalid_argument("synthetic: means must share a positive dimension");

    Dataset ds;
    const std::size_t p = mean1.size();
    for (std::size_t j = 0; j < p; ++j) ds.feature_names.push_back("x" + std::to_string(j + 1));
    ds.class_order = {"class1", "class2"};

    NormalSampler normal(seed);
    for (int cls = 0; cls < 2; ++cls) {
        const auto& mean = cls == 0 ? mean1 : mean2;
        for (std::size_t i = 0; i < n_per_class; ++i) {
            std::vector<double> x(p);
            for (std::size_t j = 0; j < p; ++j) x[j] = mean[j] + stddev * normal.next();
            ds.samples.push_back(std::move(x));
            ds.labels.push_back(cls == 0 ? "class1" : "class2");
        }
    }
    return ds;
}

}  // namespace fclda
