#include "majorate/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace majorate {

namespace {

using nlohmann::json;

std::vector<double> weights_from_json(const json& node) {
    if (!node.is_array()) {
        throw Error(ErrorCode::ParseError, "\"weights\" must be a JSON array of numbers");
    }
    std::vector<double> weights;
    weights.reserve(node.size());
    for (const auto& item : node) {
        if (!item.is_number()) {
            throw Error(ErrorCode::ParseError, "weights must all be numbers");
        }
        weights.push_back(item.get<double>());
    }
    return weights;
}

std::vector<double> weights_from_csv(const std::string& content) {
    std::vector<double> weights;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(begin, end - begin + 1);
        char* parsed_end = nullptr;
        const double value = std::strtod(token.c_str(), &parsed_end);
        if (parsed_end != token.c_str() + token.size()) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + " is not a number: " + token);
        }
        weights.push_back(value);
    }
    return weights;
}

}  // namespace

ProbDist parse_dist(const std::string& content, bool auto_normalize) {
    const std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw Error(ErrorCode::ParseError, "empty distribution file");
    }

    std::vector<double> weights;
    if (content[first] == '{' || content[first] == '[') {
        json doc;
        try {
            doc = json::parse(content);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
        }
        if (doc.is_object()) {
            if (!doc.contains("weights")) {
                throw Error(ErrorCode::ParseError, "distribution object lacks \"weights\"");
            }
            weights = weights_from_json(doc["weights"]);
        } else {
            weights = weights_from_json(doc);
        }
    } else {
        weights = weights_from_csv(content);
    }
    return canonicalize(weights, auto_normalize);
}

ProbDist load_dist(const std::string& path, bool auto_normalize) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dist(buf.str(), auto_normalize);
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace majorate
