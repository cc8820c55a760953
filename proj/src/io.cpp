#include "momest/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace momest {

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string serialize_instance(const WeightedInstance& inst) {
    std::string out = "weights-v1 " + std::to_string(inst.size()) + "\n";
    for (const double w : inst.weights) {
        out += format_g17(w);
        out += '\n';
    }
    if (!inst.label.empty()) {
        std::string label = inst.label;
        for (char& c : label) {
            if (c == '\n' || c == '\r') c = ' ';
        }
        out += "# label: " + label + "\n";
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_weight(std::string_view line, std::size_t line_no) {
    const std::string token(trim(line));
    if (token.empty()) {
        throw IoError("line " + std::to_string(line_no) + ": expected a weight, got an empty line");
    }
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
        throw IoError("line " + std::to_string(line_no) + ": cannot parse weight '" + token + "'");
    }
    return value;
}

} // namespace

WeightedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty instance file");

    std::istringstream header(line);
    std::string magic;
    std::uint64_t declared = 0;
    if (!(header >> magic >> declared) || magic != "weights-v1") {
        throw IoError("bad header '" + line + "'; expected 'weights-v1 <n>'");
    }
    std::string rest;
    if (header >> rest) throw IoError("trailing tokens after header");

    WeightedInstance inst;
    inst.weights.reserve(declared);
    std::size_t line_no = 1;
    while (inst.weights.size() < declared && std::getline(in, line)) {
        ++line_no;
        inst.weights.push_back(parse_weight(line, line_no));
    }
    if (inst.weights.size() != declared) {
        throw IoError("declared n = " + std::to_string(declared) + " but found only " +
                      std::to_string(inst.weights.size()) + " weight lines");
    }
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view t = trim(line);
        if (t.empty()) continue;
        if (t.front() != '#') {
            throw IoError("line " + std::to_string(line_no) +
                          ": unexpected content after the declared weights");
        }
        constexpr std::string_view kLabel = "# label: ";
        if (std::string_view(line).substr(0, kLabel.size()) == kLabel) {
            inst.label = std::string(std::string_view(line).substr(kLabel.size()));
        }
    }
    validate_instance(inst);
    return inst;
}

WeightedInstance read_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    return parse_instance(buf.str());
}

void write_instance(const WeightedInstance& inst, const std::string& path, bool overwrite) {
    validate_instance(inst);
    if (!overwrite && std::filesystem::exists(path)) {
        throw IoError("refusing to overwrite existing file '" + path + "' (use --force)");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << serialize_instance(inst);
    out.flush();
    if (!out) throw IoError("write failure on '" + path + "'");
}

} // namespace momest
