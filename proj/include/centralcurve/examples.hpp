#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "instance.hpp"

namespace centralcurve {

// Built-in instance catalog.  Documents are rational-exact; parsing one and
// serializing it again reproduces every entry bit for bit.

inline std::vector<std::string> builtin_example_names() {
    return {"disjoint-support", "dtz-snake", "hexagon", "hexagon-straight",
            "klee-minty", "moment-curve-2x5"};
}

inline nlohmann::json builtin_example_json(const std::string& name) {
    using nlohmann::json;
    json j;
    j["name"] = name;
    if (name == "dtz-snake") {
        j["A"] = {{"0", "-1", "1", "-1", "1", "-1"},
                  {"-1", "1/10", "1/3", "100/11", "1000/11", "10000/11"}};
        j["b"] = {"0", "1"};
        j["c"] = {"-1", "-1/2", "-1/3", "-449989/990000", "-359989/792000", "-299989/660000"};
        j["notes"] = "snake in a box: ten bounded dual cells, tightly wound path";
    } else if (name == "hexagon" || name == "hexagon-straight") {
        j["A"] = {{"1", "1", "1", "0", "0", "0"},
                  {"0", "0", "0", "1", "1", "1"},
                  {"1", "0", "0", "1", "0", "0"},
                  {"0", "1", "0", "0", "1", "0"},
                  {"0", "0", "1", "0", "0", "1"}};
        j["b"] = {"3", "3", "2", "2", "2"};
        if (name == "hexagon") {
            j["c"] = {"0", "0", "0", "0", "1", "3"};
            j["notes"] = "transportation hexagon; see hexagon-straight for the cost "
                         "whose path contains a straight segment";
        } else {
            j["c"] = {"0", "0", "0", "0", "1", "2"};
            j["notes"] = "hexagon cost variant with a straight central path segment";
        }
    } else if (name == "klee-minty") {
        j["A"] = {{"1", "1", "0", "0", "0", "0"},
                  {"1/5", "0", "1", "1", "0", "0"},
                  {"1/50", "0", "1/5", "0", "1", "1"}};
        j["b"] = {"1", "1", "1"};
        j["c"] = {"1", "2", "3", "4", "5", "6"};
        j["notes"] = "deformed cube, epsilon = 1/10, with a generic cost";
    } else if (name == "moment-curve-2x5") {
        j["A"] = {{"1", "1", "1", "1", "1"}, {"0", "1", "2", "3", "4"}};
        j["b"] = {"1", "2"};
        j["c"] = {"0", "1", "8", "27", "64"};
        j["notes"] = "five points on the moment curve; both side matroids are uniform";
    } else if (name == "disjoint-support") {
        j["A"] = {{"1", "-1", "0", "0"}, {"0", "1", "1", "-1"}};
        j["b"] = {"1", "1"};
        j["c"] = {"1", "2", "3", "4"};
        j["notes"] = "kernel and row space carry vectors with disjoint supports";
    } else {
        std::string list;
        for (const auto& nm : builtin_example_names()) list += (list.empty() ? "" : ", ") + nm;
        throw UnknownExample(name + " (known: " + list + ")");
    }
    return j;
}

inline LPInstance builtin_example(const std::string& name) {
    return instance_from_json(builtin_example_json(name));
}

} // namespace centralcurve
