#include "lct/signal_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "num_io.hpp"

namespace lct {

using detail::format_double;
using detail::parse_double;

void write_signal_csv(const Signal& x, std::ostream& out) {
    out << "# delta=" << format_double(x.delta()) << "\n";
    out << "n,re,im\n";
    for (int n = x.index_min(); n <= x.index_max(); ++n)
        out << n << ',' << format_double(x.at(n).real()) << ',' << format_double(x.at(n).imag())
            << "\n";
}

Signal read_signal_csv(std::istream& in) {
    std::string line;
    double delta = 0.0;
    bool header_seen = false;
    std::vector<int> indices;
    std::vector<cplx> samples;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("delta=");
            if (pos != std::string::npos) delta = parse_double(line.substr(pos + 6));
            continue;
        }
        if (!header_seen) {
            if (line != "n,re,im") throw ParseError("expected CSV header 'n,re,im'");
            header_seen = true;
            continue;
        }
        std::stringstream ss(line);
        std::string n_str, re_str, im_str, extra;
        if (!std::getline(ss, n_str, ',') || !std::getline(ss, re_str, ',') ||
            !std::getline(ss, im_str, ',') || std::getline(ss, extra, ','))
            throw ParseError("bad CSV row: '" + line + "'");
        indices.push_back(static_cast<int>(parse_double(n_str)));
        samples.emplace_back(parse_double(re_str), parse_double(im_str));
    }
    if (!header_seen || samples.empty()) throw ParseError("empty or headerless signal CSV");
    const int n_samples = static_cast<int>(samples.size());
    const int n0 = -(n_samples / 2);
    for (int i = 0; i < n_samples; ++i)
        if (indices[static_cast<size_t>(i)] != n0 + i)
            throw ParseError("index column is not the contiguous centered range");
    return Signal(std::move(samples), delta);
}

void write_signal_json(const Signal& x, std::ostream& out) {
    nlohmann::json j;
    j["delta"] = x.delta();
    auto& re = j["re"] = nlohmann::json::array();
    auto& im = j["im"] = nlohmann::json::array();
    for (const cplx& s : x.samples()) {
        re.push_back(s.real());
        im.push_back(s.imag());
    }
    out << j.dump() << "\n";
}

Signal read_signal_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad signal JSON: ") + e.what());
    }
    if (!j.contains("re") || !j.contains("im")) throw ParseError("signal JSON needs re and im");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
        throw ParseError("re/im must be equal-length nonempty arrays");
    std::vector<cplx> samples;
    samples.reserve(re.size());
    for (size_t i = 0; i < re.size(); ++i)
        samples.emplace_back(re[i].get<double>(), im[i].get<double>());
    const double delta = j.value("delta", 0.0);
    try {
        return Signal(std::move(samples), delta);
    } catch (const InvalidSignal& e) {
        throw ParseError(e.what());
    }
}

namespace {
bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}
}  // namespace

void save_signal(const Signal& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    if (has_json_extension(path)) write_signal_json(x, out);
    else write_signal_csv(x, out);
}

Signal load_signal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    if (has_json_extension(path)) return read_signal_json(in);
    return read_signal_csv(in);
}

}  // namespace lct
