#include "regseq/rep_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace regseq::linrep {

using nlohmann::json;

namespace {

Rational scalar(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw std::invalid_argument("rep file: " + where +
                                " must be an integer or an exact fraction string");
}

Matrix vector_row(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("rep file: " + where + " must be a non-empty array");
    std::vector<Rational> v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(scalar(j[i], where + "[" + std::to_string(i) + "]"));
    return Matrix::row_vector(std::move(v));
}

Matrix matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("rep file: " + where + " must be a non-empty 2D array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0)
        throw std::invalid_argument("rep file: " + where + " rows must be non-empty arrays");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw std::invalid_argument("rep file: " + where + " is ragged at row " +
                                        std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = scalar(j[r][c], where + "[" + std::to_string(r) + "][" +
                                             std::to_string(c) + "]");
    }
    return m;
}

} // namespace

LinearRep load_rep(std::istream& is) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("rep file: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("rep file: top level must be an object");
    for (const char* key : {"radix", "dim", "initial", "digit_mats"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("rep file: missing field '") + key + "'");

    const unsigned radix = j["radix"].get<unsigned>();
    const std::size_t dim = j["dim"].get<std::size_t>();
    Matrix initial = vector_row(j["initial"], "initial");
    if (initial.cols() != dim)
        throw std::invalid_argument("rep file: 'dim' is " + std::to_string(dim) +
                                    " but 'initial' has dimension " +
                                    std::to_string(initial.cols()));

    const json& jm = j["digit_mats"];
    if (!jm.is_array())
        throw std::invalid_argument("rep file: digit_mats must be an array of matrices");
    std::vector<Matrix> mats;
    mats.reserve(jm.size());
    for (std::size_t b = 0; b < jm.size(); ++b)
        mats.push_back(matrix(jm[b], "digit_mats[" + std::to_string(b) + "]"));

    Matrix final_col = j.contains("final")
                           ? vector_row(j["final"], "final").transpose()
                           : Matrix::unit_col(dim, 0);

    LinearRep rep(radix, std::move(initial), std::move(mats), std::move(final_col));
    if (rep.dim() != dim)
        throw std::invalid_argument("rep file: 'dim' is " + std::to_string(dim) +
                                    " but vectors have dimension " + std::to_string(rep.dim()));
    return rep;
}

LinearRep load_rep(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw std::invalid_argument("rep file: cannot open " + p.string());
    return load_rep(is);
}

std::string rep_to_json(const LinearRep& rep) {
    json j;
    j["radix"] = rep.radix();
    j["dim"] = rep.dim();
    json init = json::array();
    for (std::size_t c = 0; c < rep.dim(); ++c)
        init.push_back(rep.initial().at(0, c).to_string());
    j["initial"] = std::move(init);
    json mats = json::array();
    for (unsigned b = 0; b < rep.radix(); ++b) {
        json m = json::array();
        for (std::size_t r = 0; r < rep.dim(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < rep.dim(); ++c)
                row.push_back(rep.digit_mat(b).at(r, c).to_string());
            m.push_back(std::move(row));
        }
        mats.push_back(std::move(m));
    }
    j["digit_mats"] = std::move(mats);
    json fin = json::array();
    for (std::size_t r = 0; r < rep.dim(); ++r)
        fin.push_back(rep.final_col().at(r, 0).to_string());
    j["final"] = std::move(fin);
    return j.dump(2);
}

void save_rep(const LinearRep& rep, const std::filesystem::path& p) {
    std::ofstream os(p);
    if (!os) throw std::invalid_argument("rep file: cannot open " + p.string() + " for writing");
    os << rep_to_json(rep) << "\n";
}

} // namespace regseq::linrep
