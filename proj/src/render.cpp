#include "render.hpp"

#include <sstream>

#include "error.hpp"

namespace gnomon {

namespace {

constexpr std::uint64_t kCanvasBound = 1000000; // drawing units per side

// Exact decimal of num/den, at most 12 fraction digits, trailing zeros
// trimmed. Deterministic by construction.
std::string rational_decimal(const Int& num, const Int& den) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string out = to_decimal(q);
    if (r == 0)
        return out;
    std::string frac;
    for (int i = 0; i < 12 && r != 0; ++i) {
        r *= 10;
        Int d;
        mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        frac += to_decimal(d);
    }
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    if (!frac.empty())
        out += "." + frac;
    return out;
}

class SvgWriter {
public:
    SvgWriter(const Int& total, const Int& margin, const std::string& size) {
        svg_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        svg_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
             << size << "\" viewBox=\"-" << to_decimal(margin) << " -" << to_decimal(margin)
             << " " << to_decimal(total) << " " << to_decimal(total) << "\">\n";
    }

    void comment(const std::string& body) { svg_ << "<!--\n" << body << "-->\n"; }

    void open_group(const std::string& stroke_width) {
        svg_ << "<g stroke=\"#444444\" stroke-width=\"" << stroke_width << "\" fill-opacity=\"1\">\n";
    }

    void close_group() { svg_ << "</g>\n"; }

    void rect(const std::string& id, const std::string& cls, const Int& x, const Int& y,
              const Int& w, const Int& h, const char* fill) {
        svg_ << "<rect id=\"" << id << "\" class=\"" << cls << "\" x=\"" << to_decimal(x)
             << "\" y=\"" << to_decimal(y) << "\" width=\"" << to_decimal(w) << "\" height=\""
             << to_decimal(h) << "\" fill=\"" << fill << "\"/>\n";
    }

    void text(const Int& x, const Int& y, const std::string& font_size, const std::string& body) {
        svg_ << "<text x=\"" << to_decimal(x) << "\" y=\"" << to_decimal(y)
             << "\" font-family=\"monospace\" font-size=\"" << font_size
             << "\" text-anchor=\"middle\" fill=\"#222222\">" << body << "</text>\n";
    }

    std::string finish() {
        svg_ << "</svg>\n";
        return svg_.str();
    }

private:
    std::ostringstream svg_;
};

std::string metadata_block(const GnomonDecomposition& d) {
    std::ostringstream m;
    m << "s=" << to_decimal(d.s) << "\n";
    m << "t=" << to_decimal(d.t) << "\n";
    m << "l=" << to_decimal(d.l) << "\n";
    m << "x=" << to_decimal(d.inner_side) << "\n";
    m << "y=" << to_decimal(d.y_side) << "\n";
    m << "z=" << to_decimal(d.gnomon_u_side) << "\n";
    m << "area_gnomon_t=" << to_decimal(d.area_gnomon_t) << "\n";
    m << "area_rectangles=" << to_decimal(d.area_rectangles) << "\n";
    m << "area_gnomon_u=" << to_decimal(d.area_gnomon_u) << "\n";
    return m.str();
}

// milli is an exact thousandth; always a terminating decimal
std::string milli_decimal(const Int& milli) {
    Int q = milli / 1000;
    Int r = milli % 1000;
    if (r == 0)
        return to_decimal(q);
    std::string frac = to_decimal(r);
    frac.insert(0, 3 - frac.size(), '0');
    while (frac.back() == '0')
        frac.pop_back();
    return to_decimal(q) + "." + frac;
}

} // namespace

std::string render_construction(const DiagramSpec& spec) {
    if (spec.scale_num < 1 || spec.scale_den < 1)
        throw Error(ErrorCode::invalid_parameters, "scale must be a positive rational");

    const GnomonDecomposition& d = spec.decomposition;
    const Int content = spec.stage == Stage::gnomon_u ? d.gnomon_u_side : d.y_side;
    const Int margin = 1 + content / 10;
    const Int total = content + 2 * margin;

    const Int num = Int(static_cast<unsigned long>(spec.scale_num));
    const Int den = Int(static_cast<unsigned long>(spec.scale_den));
    if (total * num > kCanvasBound * den)
        throw Error(ErrorCode::scale_overflow,
                    "drawing of " + rational_decimal(total * num, den) +
                        " units exceeds the canvas bound of " + std::to_string(kCanvasBound));

    const std::string size = rational_decimal(total * num, den);
    const std::string stroke = milli_decimal(std::max(Int(50), Int(content * 1000 / 400)));
    const std::string font = milli_decimal(std::max(Int(700), Int(content * 1000 / 15)));

    SvgWriter w(total, margin, size);
    w.comment(metadata_block(d));

    const Int& s = d.s;
    const Int& x = d.inner_side;
    const Int& y = d.y_side;
    const Int& z = d.gnomon_u_side;
    const Int& th = d.gnomon_t_thickness; // 2t^2
    const Int& l2 = d.rect_height;        // l^2

    switch (spec.stage) {
    case Stage::gnomon_u:
        // Fixed decomposition of square z: inner square x, the two arms and
        // corner of gnomon T, and the two filler rectangles (each 2t^2 x l^2)
        // that extend the arms, closing gnomon U of thickness 2t^2.
        w.comment("regions: inner-square x*x; gnomon-t arms " + to_decimal(th) + "x" +
                  to_decimal(s) + "; corner " + to_decimal(th) + "x" + to_decimal(th) +
                  "; fillers " + to_decimal(th) + "x" + to_decimal(l2) + "\n");
        w.open_group(stroke);
        w.rect("inner-square", "inner-square", 0, 0, x, x, "#dbe9f6");
        w.rect("gnomon-t-arm-vertical", "t-arm", x, 0, th, s, "#e8c9a3");
        w.rect("filler-vertical", "filler", x, s, th, l2, "#b5d6a7");
        w.rect("gnomon-t-corner", "t-corner", x, x, th, th, "#d8ac77");
        w.rect("gnomon-t-arm-horizontal", "t-arm", 0, x, s, th, "#e8c9a3");
        w.rect("filler-horizontal", "filler", s, x, l2, th, "#b5d6a7");
        w.close_group();
        if (spec.labels) {
            w.text(x / 2, x / 2, font, "x = " + to_decimal(x));
            w.text(z / 2, z + margin / 2 + 1, font, "z = " + to_decimal(z));
            w.text(x + th / 2, x + th / 2, font, "2t^2 = " + to_decimal(th));
        }
        break;

    case Stage::gnomon_t:
        // Square y as the generating square s plus gnomon T of thickness 2t^2.
        w.comment("regions: generating-square " + to_decimal(s) + "x" + to_decimal(s) +
                  "; gnomon-t arms " + to_decimal(th) + "x" + to_decimal(s) + "; corner " +
                  to_decimal(th) + "x" + to_decimal(th) + "\n");
        w.open_group(stroke);
        w.rect("generating-square", "inner-square", 0, 0, s, s, "#dbe9f6");
        w.rect("gnomon-t-arm-vertical", "t-arm", s, 0, th, s, "#e8c9a3");
        w.rect("gnomon-t-corner", "t-corner", s, s, th, th, "#d8ac77");
        w.rect("gnomon-t-arm-horizontal", "t-arm", 0, s, s, th, "#e8c9a3");
        w.close_group();
        if (spec.labels) {
            w.text(s / 2, s / 2, font, "s = " + to_decimal(s));
            w.text(y / 2, y + margin / 2 + 1, font, "y = " + to_decimal(y));
        }
        break;

    case Stage::square_sequence:
        // Unit-gnomon buildup 1^2 -> y^2; ring n has area 2n+1.
        w.comment("regions: unit-square 1x1; ring n = vertical 1x n + horizontal (n+1)x 1\n");
        w.open_group(stroke);
        w.rect("square-1", "unit-square", 0, 0, 1, 1, "#dbe9f6");
        for (Int n = 1; n < y; ++n) {
            const char* fill = is_odd(n) ? "#e8c9a3" : "#b5d6a7";
            const std::string tag = to_decimal(n);
            w.rect("ring-" + tag + "-vertical", "ring", n, 0, 1, n, fill);
            w.rect("ring-" + tag + "-horizontal", "ring", 0, n, n + 1, 1, fill);
        }
        w.close_group();
        if (spec.labels)
            w.text(y / 2, y + margin / 2 + 1, font, "y = " + to_decimal(y));
        break;
    }

    return w.finish();
}

} // namespace gnomon
