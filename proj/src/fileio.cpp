#include "dsp/fileio.hpp"

#include <fstream>

namespace dsp {

Flavor flavor_from_string(const std::string& s) {
    if (s == "additive") return Flavor::additive;
    if (s == "multiplicative") return Flavor::multiplicative;
    throw FileFormatError("flavor must be \"additive\" or \"multiplicative\", got \"" + s + "\"");
}

std::string flavor_to_string(Flavor f) {
    return f == Flavor::additive ? "additive" : "multiplicative";
}

namespace {

Scalar parse_field(const Json& j, const char* where) {
    if (!j.is_string()) throw FileFormatError(std::string(where) + ": expression must be a string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const SyntaxError& e) {
        throw FileFormatError(std::string(where) + ": " + e.what());
    } catch (const DivisionByZero& e) {
        throw FileFormatError(std::string(where) + ": " + e.what());
    }
}

const Json& need(const Json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw FileFormatError(std::string(where) + ": missing required field \"" + key + "\"");
    return *it;
}

}  // namespace

std::vector<ConjugacyClassSpec> classes_from_json(const Json& j) {
    if (!j.is_object()) throw FileFormatError("class file: expected a JSON object");
    Flavor flavor = flavor_from_string(need(j, "flavor", "class file").get<std::string>());
    int n = need(j, "n", "class file").get<int>();
    const Json& arr = need(j, "classes", "class file");
    if (!arr.is_array() || arr.empty())
        throw FileFormatError("class file: \"classes\" must be a non-empty array");
    std::vector<ConjugacyClassSpec> out;
    for (const auto& cj : arr) {
        ConjugacyClassSpec c;
        c.n = n;
        c.flavor = flavor;
        const Json& spec = need(cj, "spectrum", "class");
        if (!spec.is_array() || spec.empty())
            throw FileFormatError("class: \"spectrum\" must be a non-empty array");
        for (const auto& ej : spec) {
            SpectrumEntry e;
            e.value = parse_field(need(ej, "value", "spectrum entry"), "spectrum value");
            int mult = need(ej, "mult", "spectrum entry").get<int>();
            if (mult < 1) throw FileFormatError("spectrum entry: mult must be >= 1");
            if (ej.contains("blocks")) {
                e.blocks = ej["blocks"].get<std::vector<int>>();
                int total = 0;
                for (int b : e.blocks) total += b;
                if (total != mult)
                    throw FileFormatError("spectrum entry: blocks must sum to mult");
            } else {
                e.blocks.assign(mult, 1);
            }
            c.spectrum.push_back(std::move(e));
        }
        try {
            c.validate();
        } catch (const ValidationError& e) {
            throw FileFormatError(std::string("class file: ") + e.what());
        }
        out.push_back(std::move(c));
    }
    return out;
}

Json classes_to_json(const std::vector<ConjugacyClassSpec>& classes) {
    Json j;
    j["version"] = "1";
    j["flavor"] = flavor_to_string(classes.at(0).flavor);
    j["n"] = classes.at(0).n;
    Json arr = Json::array();
    for (const auto& c : classes) {
        Json cj;
        Json spec = Json::array();
        for (const auto& e : c.spectrum) {
            Json ej;
            ej["value"] = to_string(e.value);
            ej["mult"] = e.mult();
            bool diagonal = true;
            for (int b : e.blocks) diagonal = diagonal && b == 1;
            if (!diagonal) ej["blocks"] = e.blocks;
            spec.push_back(std::move(ej));
        }
        cj["spectrum"] = std::move(spec);
        arr.push_back(std::move(cj));
    }
    j["classes"] = std::move(arr);
    return j;
}

MatrixTuple tuple_from_json(const Json& j) {
    if (!j.is_object()) throw FileFormatError("tuple file: expected a JSON object");
    MatrixTuple t;
    t.flavor = flavor_from_string(need(j, "flavor", "tuple file").get<std::string>());
    int n = need(j, "n", "tuple file").get<int>();
    if (n < 1) throw FileFormatError("tuple file: n must be >= 1");
    const Json& mats = need(j, "matrices", "tuple file");
    if (!mats.is_array() || mats.empty())
        throw FileFormatError("tuple file: \"matrices\" must be a non-empty array");
    for (const auto& mj : mats) {
        if (!mj.is_array() || static_cast<int>(mj.size()) != n * n)
            throw FileFormatError("tuple file: each matrix needs n*n row-major entries");
        ExactMatrix m(n, n);
        for (int i = 0; i < n * n; ++i) m.entries[i] = parse_field(mj[i], "matrix entry");
        t.matrices.push_back(std::move(m));
    }
    if (j.contains("classes") && !j["classes"].is_null()) {
        t.classes = classes_from_json(j["classes"]);
        if (static_cast<int>(t.classes->size()) != t.count())
            throw FileFormatError("tuple file: class count must match matrix count");
        for (const auto& c : *t.classes) {
            if (c.n != n) throw FileFormatError("tuple file: class size differs from n");
            if (c.flavor != t.flavor) throw FileFormatError("tuple file: class flavor differs");
        }
    }
    return t;
}

Json tuple_to_json(const MatrixTuple& t, const Json& expect) {
    Json j;
    j["version"] = "1";
    j["flavor"] = flavor_to_string(t.flavor);
    j["n"] = t.n();
    Json mats = Json::array();
    for (const auto& m : t.matrices) {
        Json mj = Json::array();
        for (const auto& v : m.entries) mj.push_back(to_string(v));
        mats.push_back(std::move(mj));
    }
    j["matrices"] = std::move(mats);
    if (t.classes) j["classes"] = classes_to_json(*t.classes);
    if (!expect.is_null() && !expect.empty()) j["expect"] = expect;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FileFormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw FileFormatError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace dsp
