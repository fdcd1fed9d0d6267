#include "growthlab/gridspec.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace growthlab {

namespace {

[[noreturn]] void fail(const std::string& text, const std::string& why) {
    throw std::domain_error("grid \"" + text + "\": " + why +
                            " (expected lo:hi:linear|geometric:count)");
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 4) fail(text, "needs four colon-separated fields");

    GridSpec spec;
    try {
        std::size_t used = 0;
        spec.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        spec.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        spec.count = std::stol(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    } catch (const std::logic_error&) {
        fail(text, "non-numeric field");
    }
    if (parts[2] == "linear")
        spec.kind = Kind::linear;
    else if (parts[2] == "geometric")
        spec.kind = Kind::geometric;
    else
        fail(text, "unknown kind \"" + parts[2] + "\"");
    if (spec.count < 2) fail(text, "count must be >= 2");
    if (!(spec.lo < spec.hi)) fail(text, "needs lo < hi");
    if (spec.kind == Kind::geometric && !(spec.lo > 0.0))
        fail(text, "geometric grids need lo > 0");
    return spec;
}

std::vector<double> GridSpec::points() const {
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(count));
    if (kind == Kind::linear) {
        double step = (hi - lo) / static_cast<double>(count - 1);
        for (long i = 0; i < count; ++i)
            pts.push_back(lo + step * static_cast<double>(i));
    } else {
        double llo = std::log(lo), lhi = std::log(hi);
        double step = (lhi - llo) / static_cast<double>(count - 1);
        for (long i = 0; i < count; ++i)
            pts.push_back(std::exp(llo + step * static_cast<double>(i)));
    }
    pts.front() = lo;
    pts.back() = hi;
    return pts;
}

std::string GridSpec::str() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g:%.17g:%s:%ld", lo, hi,
                  kind == Kind::linear ? "linear" : "geometric", count);
    return buf;
}

}  // namespace growthlab
