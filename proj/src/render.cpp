#include "cobord/render.hpp"

#include <algorithm>

namespace cobord {

std::string monomial_str(const Exp& e, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += names[i];
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

CoefficientTable series_table(const Series& s, const std::vector<std::string>& names)
{
    CoefficientTable t;
    for (const auto& [e, c] : s.terms())
        t.rows.push_back(TableRow{monomial_str(e, names), c.str()});
    return t;
}

std::string render_table(const CoefficientTable& t, const std::string& format)
{
    std::string out;
    if (format == "rows") {
        for (const auto& r : t.rows)
            out += r.monomial + "\t" + r.coefficient + "\n";
        return out;
    }
    std::size_t width = 0;
    for (const auto& r : t.rows)
        width = std::max(width, r.monomial.size());
    for (const auto& r : t.rows) {
        out += r.monomial;
        out.append(width - r.monomial.size() + 2, ' ');
        out += r.coefficient + "\n";
    }
    if (t.rows.empty())
        out += "(zero)\n";
    return out;
}

std::string render_class(const FaceClass& cls, const std::string& format)
{
    const FaceModule& mod = cls.mod();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < mod.shape().width(); ++i)
        names.push_back(mod.var_name(i));

    std::vector<Face> faces;
    for (const auto& [J, s] : cls.parts())
        faces.push_back(J);
    std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
        if (face_size(a) != face_size(b))
            return face_size(a) < face_size(b);
        return a < b;
    });

    std::string out;
    for (Face J : faces) {
        out += "face " + face_str(J, mod.cfg().m()) + ":\n";
        out += render_table(series_table(cls.parts().at(J), names), format);
    }
    if (faces.empty())
        out += "(zero class)\n";
    return out;
}

std::vector<std::string> default_names(std::uint32_t arity)
{
    if (arity == 2)
        return {"u", "v"};
    std::vector<std::string> names;
    for (std::uint32_t i = 1; i <= arity; ++i)
        names.push_back("u" + std::to_string(i));
    return names;
}

}  // namespace cobord
