#include "eob/sweep.hpp"

#include "eob/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace eob
{

std::string fmt_g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> v(n);
    if (n == 1)
    {
        v[0] = lo;
        return v;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
    {
        v[i] = lo + step * static_cast<double>(i);
    }
    if (n > 1)
    {
        v.back() = hi;
    }
    return v;
}

std::vector<double> logspace(double lo_exp10, double hi_exp10, std::size_t n)
{
    std::vector<double> v = linspace(lo_exp10, hi_exp10, n);
    for (double &x : v)
    {
        x = std::pow(10.0, x);
    }
    return v;
}

namespace
{
std::ofstream open_for_write(const std::string &path)
{
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out)
    {
        throw config_error("failed to open for writing: " + path);
    }
    return out;
}

nlohmann::json json_number(double v)
{
    // nlohmann serializes non-finite values as null; keep them readable.
    if (std::isinf(v))
    {
        return v > 0 ? "inf" : "-inf";
    }
    if (std::isnan(v))
    {
        return "nan";
    }
    return v;
}

nlohmann::json json_array(const std::vector<double> &v)
{
    nlohmann::json arr = nlohmann::json::array();
    for (double x : v)
    {
        arr.push_back(json_number(x));
    }
    return arr;
}
} // namespace

void write_sweep_csv(const std::string &path, const SweepResult &sweep)
{
    std::ofstream out = open_for_write(path);
    out << sweep.axis1_name;
    if (sweep.is_2d())
    {
        out << "," << sweep.axis2_name;
    }
    for (const auto &name : sweep.column_names)
    {
        out << "," << name;
    }
    out << "\n";

    const std::size_t n2 = sweep.is_2d() ? sweep.axis2.size() : 1;
    for (std::size_t i = 0; i < sweep.axis1.size(); ++i)
    {
        for (std::size_t j = 0; j < n2; ++j)
        {
            const std::size_t idx = i * n2 + j;
            out << fmt_g17(sweep.axis1[i]);
            if (sweep.is_2d())
            {
                out << "," << fmt_g17(sweep.axis2[j]);
            }
            for (const auto &col : sweep.columns)
            {
                out << "," << fmt_g17(col[idx]);
            }
            out << "\n";
        }
    }
}

void write_overlay_csv(const std::string &path, const SweepResult &sweep)
{
    std::ofstream out = open_for_write(path);
    out << sweep.axis1_name;
    for (const auto &[name, values] : sweep.overlays)
    {
        out << "," << name;
    }
    out << "\n";
    for (std::size_t i = 0; i < sweep.axis1.size(); ++i)
    {
        out << fmt_g17(sweep.axis1[i]);
        for (const auto &[name, values] : sweep.overlays)
        {
            out << "," << fmt_g17(values[i]);
        }
        out << "\n";
    }
}

void write_sweep_json(const std::string &path, const SweepResult &sweep)
{
    nlohmann::json doc;
    doc["axes"] = nlohmann::json::array();
    doc["axes"].push_back({{"name", sweep.axis1_name}, {"values", json_array(sweep.axis1)}});
    if (sweep.is_2d())
    {
        doc["axes"].push_back({{"name", sweep.axis2_name}, {"values", json_array(sweep.axis2)}});
    }
    doc["columns"] = nlohmann::json::array();
    for (std::size_t c = 0; c < sweep.column_names.size(); ++c)
    {
        doc["columns"].push_back(
            {{"name", sweep.column_names[c]}, {"values", json_array(sweep.columns[c])}});
    }
    doc["overlays"] = nlohmann::json::array();
    for (const auto &[name, values] : sweep.overlays)
    {
        doc["overlays"].push_back({{"name", name}, {"values", json_array(values)}});
    }

    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << "\n";
}

} // namespace eob
