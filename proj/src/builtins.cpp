#include "supersplit/builtins.hpp"

#include <sstream>

namespace supersplit {

namespace {

std::vector<int> parse_twists(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int val = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad twist list: " + s);
        v.push_back(val);
    }
    return v;
}

}  // namespace

Bundle builtin_bundle(const std::string& name, SuperSpaceSig space) {
    if (name == "O") return SplitBundle{space, FreeSupermodule({0}, {})};
    if (name.rfind("O(", 0) == 0 && name.back() == ')') {
        int a = std::stoi(name.substr(2, name.size() - 3));
        return SplitBundle{space, FreeSupermodule({a}, {})};
    }
    if (name.rfind("split:", 0) == 0) {
        std::string body = name.substr(6);
        auto semi = body.find(';');
        std::string ev = semi == std::string::npos ? body : body.substr(0, semi);
        std::string od = semi == std::string::npos ? "" : body.substr(semi + 1);
        return SplitBundle{space, FreeSupermodule(parse_twists(ev), parse_twists(od))};
    }
    if (name == "tangent") return euler_tangent(space);
    if (name == "cotangent") return euler_cotangent(space);
    throw std::invalid_argument("unknown builtin bundle: " + name);
}

std::vector<std::string> builtin_names() {
    return {"O", "O(a)", "split:a1,a2;b1,b2", "tangent", "cotangent"};
}

}  // namespace supersplit
