#include "leonard/families.hpp"

#include <algorithm>
#include <sstream>

namespace leonard {

namespace {

struct FamilyInfo {
    FamilyTag tag;
    const char* name;
    std::vector<std::string> params; // beyond theta0/thetastar0
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {FamilyTag::QRacah, "q_racah", {"q", "h", "hstar", "s", "sstar", "r1", "r2"}},
        {FamilyTag::QHahn, "q_hahn", {"q", "h", "hstar", "sstar", "r"}},
        {FamilyTag::DualQHahn, "dual_q_hahn", {"q", "h", "hstar", "s", "r"}},
        {FamilyTag::QuantumQKrawtchouk, "quantum_q_krawtchouk", {"q", "hstar", "s", "r"}},
        {FamilyTag::QKrawtchouk, "q_krawtchouk", {"q", "h", "hstar", "sstar"}},
        {FamilyTag::AffineQKrawtchouk, "affine_q_krawtchouk", {"q", "h", "hstar", "r"}},
        {FamilyTag::DualQKrawtchouk, "dual_q_krawtchouk", {"q", "h", "hstar", "s"}},
        {FamilyTag::Racah, "racah", {"h", "hstar", "s", "sstar", "r1", "r2"}},
        {FamilyTag::Hahn, "hahn", {"hstar", "s", "sstar", "r"}},
        {FamilyTag::DualHahn, "dual_hahn", {"h", "s", "sstar", "r"}},
        {FamilyTag::Krawtchouk, "krawtchouk", {"s", "sstar", "r"}},
        {FamilyTag::BannaiIto, "bannai_ito", {"h", "hstar", "s", "sstar", "r1", "r2"}},
        {FamilyTag::Orphan, "orphan", {"h", "hstar", "s", "sstar", "r"}},
    };
    return table;
}

const FamilyInfo& info_for(FamilyTag tag) {
    for (const auto& fi : family_table())
        if (fi.tag == tag) return fi;
    throw std::invalid_argument("unknown family tag");
}

std::size_t family_order(FamilyTag tag) {
    const auto& table = family_table();
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].tag == tag) return i;
    return table.size();
}

} // namespace

const std::vector<FamilyTag>& all_family_tags() {
    static const std::vector<FamilyTag> tags = [] {
        std::vector<FamilyTag> out;
        for (const auto& fi : family_table()) out.push_back(fi.tag);
        return out;
    }();
    return tags;
}

std::string family_name(FamilyTag tag) { return info_for(tag).name; }

FamilyTag family_from_name(const std::string& name) {
    for (const auto& fi : family_table())
        if (name == fi.name) return fi.tag;
    throw std::invalid_argument("unknown family name: " + name);
}

std::vector<std::string> family_param_names(FamilyTag tag) { return info_for(tag).params; }

const FieldElement& FamilyParams::at(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end())
        throw std::invalid_argument("missing family parameter: " + key);
    return it->second;
}

namespace {

class PreconditionLog {
public:
    explicit PreconditionLog(const FieldSpec& field) : field_(field) {}

    void require_nonzero(const FamilyParams& fp, const std::string& key) {
        if (fp.at(key).is_zero()) fail(key + " must be nonzero");
    }
    void require(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void fail(const std::string& what) { violations_.push_back(what); }

    // None of value * q^i may equal 1 for i in [lo, hi].
    void forbid_power_hit(const FieldElement& value, const FieldElement& q,
                          std::int64_t lo, std::int64_t hi, const std::string& label) {
        if (value.is_zero() || q.is_zero()) return; // reported elsewhere
        FieldElement acc = value * q.pow(lo);
        const FieldElement one = FieldElement::one(field_);
        for (std::int64_t i = lo; i <= hi; ++i) {
            if (acc == one)
                fail(label + " q^" + std::to_string(i) + " = 1");
            acc *= q;
        }
    }

    // value may not equal -i (as a field element) for i in [lo, hi].
    void forbid_negative_integer(const FieldElement& value, std::int64_t lo,
                                 std::int64_t hi, const std::string& label) {
        for (std::int64_t i = lo; i <= hi; ++i)
            if (value == FieldElement::from_integer(field_, -i))
                fail(label + " = " + std::to_string(-i));
    }

    std::vector<std::string> take() { return std::move(violations_); }

private:
    FieldSpec field_;
    std::vector<std::string> violations_;
};

FieldElement f_int(const FieldSpec& f, std::int64_t n) {
    return FieldElement::from_integer(f, n);
}

bool char_exceeds(const FieldSpec& f, std::int64_t bound) {
    return f.characteristic() == 0 || f.characteristic() > bound;
}

} // namespace

std::vector<std::string> family_preconditions(const FamilyParams& fp, const FieldSpec& field) {
    const std::int64_t d = static_cast<std::int64_t>(fp.d);
    PreconditionLog log(field);
    const FieldElement one = FieldElement::one(field);

    for (const auto& [key, value] : fp.values)
        if (value.field() != field)
            return {"parameter " + key + " is not an element of the field"};
    fp.at("theta0");
    fp.at("thetastar0");
    for (const auto& name : info_for(fp.tag).params) fp.at(name);

    switch (fp.tag) {
        case FamilyTag::QRacah: {
            const auto &q = fp.at("q"), &s = fp.at("s"), &ss = fp.at("sstar"),
                       &r1 = fp.at("r1"), &r2 = fp.at("r2");
            for (const char* k : {"q", "h", "hstar", "s", "sstar", "r1", "r2"})
                log.require_nonzero(fp, k);
            if (!q.is_zero() && !r1.is_zero() && !r2.is_zero()) {
                log.require(r1 * r2 == s * ss * q.pow(d + 1), "r1 r2 != s sstar q^(d+1)");
                log.forbid_power_hit(one, q, 1, d, "");
                log.forbid_power_hit(r1, q, 1, d, "r1");
                log.forbid_power_hit(r2, q, 1, d, "r2");
                log.forbid_power_hit(ss / r1, q, 1, d, "sstar/r1");
                log.forbid_power_hit(ss / r2, q, 1, d, "sstar/r2");
                log.forbid_power_hit(s, q, 2, 2 * d, "s");
                log.forbid_power_hit(ss, q, 2, 2 * d, "sstar");
            }
            break;
        }
        case FamilyTag::QHahn: {
            const auto &q = fp.at("q"), &r = fp.at("r"), &ss = fp.at("sstar");
            for (const char* k : {"q", "h", "hstar", "sstar", "r"}) log.require_nonzero(fp, k);
            if (!q.is_zero() && !r.is_zero()) {
                log.forbid_power_hit(one, q, 1, d, "");
                log.forbid_power_hit(r, q, 1, d, "r");
                log.forbid_power_hit(ss / r, q, 1, d, "sstar/r");
                log.forbid_power_hit(ss, q, 2, 2 * d, "sstar");
            }
            break;
        }
        case FamilyTag::DualQHahn: {
            const auto &q = fp.at("q"), &r = fp.at("r"), &s = fp.at("s");
            for (const char* k : {"q", "h", "hstar", "s", "r"}) log.require_nonzero(fp, k);
            if (!q.is_zero() && !r.is_zero()) {
                log.forbid_power_hit(one, q, 1, d, "");
                log.forbid_power_hit(r, q, 1, d, "r");
                log.forbid_power_hit(s / r, q, 1, d, "s/r");
                log.forbid_power_hit(s, q, 2, 2 * d, "s");
            }
            break;
        }
        case FamilyTag::QuantumQKrawtchouk: {
            const auto &q = fp.at("q"), &r = fp.at("r"), &s = fp.at("s");
            for (const char* k : {"q", "hstar", "s", "r"}) log.require_nonzero(fp, k);
            if (!q.is_zero() && !r.is_zero()) {
                log.forbid_power_hit(one, q, 1, d, "");
                log.forbid_power_hit(s / r, q, 1, d, "s/r");
            }
            break;
        }
        case FamilyTag::QKrawtchouk: {
            const auto &q = fp.at("q"), &ss = fp.at("sstar");
            for (const char* k : {"q", "h", "hstar", "sstar"}) log.require_nonzero(fp, k);
            if (!q.is_zero()) {
                log.forbid_power_hit(one, q, 1, d, "");
                log.forbid_power_hit(ss, q, 2, 2 * d, "sstar");
            }
            break;
        }
        case FamilyTag::AffineQKrawtchouk: {
            const auto &q = fp.at("q"), &r = fp.at("r");
            for (const char* k : {"q", "h", "hstar", "r"}) log.require_nonzero(fp, k);
            if (!q.is_zero()) {
                log.forbid_power_hit(one, q, 1, d, "");
                log.forbid_power_hit(r, q, 1, d, "r");
            }
            break;
        }
        case FamilyTag::DualQKrawtchouk: {
            const auto &q = fp.at("q"), &s = fp.at("s");
            for (const char* k : {"q", "h", "hstar", "s"}) log.require_nonzero(fp, k);
            if (!q.is_zero()) {
                log.forbid_power_hit(one, q, 1, d, "");
                log.forbid_power_hit(s, q, 2, 2 * d, "s");
            }
            break;
        }
        case FamilyTag::Racah: {
            const auto &s = fp.at("s"), &ss = fp.at("sstar"), &r1 = fp.at("r1"),
                       &r2 = fp.at("r2");
            log.require_nonzero(fp, "h");
            log.require_nonzero(fp, "hstar");
            log.require(r1 + r2 == s + ss + f_int(field, d + 1), "r1 + r2 != s + sstar + d + 1");
            log.require(char_exceeds(field, d), "characteristic must be 0 or > d");
            log.forbid_negative_integer(r1, 1, d, "r1");
            log.forbid_negative_integer(r2, 1, d, "r2");
            log.forbid_negative_integer(ss - r1, 1, d, "sstar - r1");
            log.forbid_negative_integer(ss - r2, 1, d, "sstar - r2");
            log.forbid_negative_integer(s, 2, 2 * d, "s");
            log.forbid_negative_integer(ss, 2, 2 * d, "sstar");
            break;
        }
        case FamilyTag::Hahn: {
            const auto &ss = fp.at("sstar"), &r = fp.at("r");
            log.require_nonzero(fp, "hstar");
            log.require_nonzero(fp, "s");
            log.require(char_exceeds(field, d), "characteristic must be 0 or > d");
            log.forbid_negative_integer(r, 1, d, "r");
            log.forbid_negative_integer(ss - r, 1, d, "sstar - r");
            log.forbid_negative_integer(ss, 2, 2 * d, "sstar");
            break;
        }
        case FamilyTag::DualHahn: {
            const auto &s = fp.at("s"), &r = fp.at("r");
            log.require_nonzero(fp, "h");
            log.require_nonzero(fp, "sstar");
            log.require(char_exceeds(field, d), "characteristic must be 0 or > d");
            log.forbid_negative_integer(r, 1, d, "r");
            log.forbid_negative_integer(s - r, 1, d, "s - r");
            log.forbid_negative_integer(s, 2, 2 * d, "s");
            break;
        }
        case FamilyTag::Krawtchouk: {
            for (const char* k : {"r", "s", "sstar"}) log.require_nonzero(fp, k);
            log.require(char_exceeds(field, d), "characteristic must be 0 or > d");
            log.require(fp.at("r") != fp.at("s") * fp.at("sstar"), "r = s sstar");
            break;
        }
        case FamilyTag::BannaiIto: {
            const auto &s = fp.at("s"), &ss = fp.at("sstar"), &r1 = fp.at("r1"),
                       &r2 = fp.at("r2");
            log.require_nonzero(fp, "h");
            log.require_nonzero(fp, "hstar");
            log.require(r1 + r2 == f_int(field, d + 1) - s - ss,
                        "r1 + r2 != -s - sstar + d + 1");
            log.require(field.characteristic() != 2 && char_exceeds(field, d / 2),
                        "characteristic must be 0 or an odd prime > d/2");
            for (std::int64_t i = 1; i <= d; ++i) {
                const FieldElement neg_i = f_int(field, -i);
                if ((d - i) % 2 == 0) {
                    log.require(r1 != neg_i, "r1 = -" + std::to_string(i));
                    log.require(-ss - r1 != neg_i, "-sstar - r1 = -" + std::to_string(i));
                }
                if (i % 2 == 1) {
                    log.require(r2 != neg_i, "r2 = -" + std::to_string(i));
                    log.require(-ss - r2 != neg_i, "-sstar - r2 = -" + std::to_string(i));
                }
                log.require(s != f_int(field, 2 * i), "s = " + std::to_string(2 * i));
                log.require(ss != f_int(field, 2 * i), "sstar = " + std::to_string(2 * i));
            }
            break;
        }
        case FamilyTag::Orphan: {
            const auto &s = fp.at("s"), &ss = fp.at("sstar"), &r = fp.at("r");
            const FieldElement one_f = FieldElement::one(field);
            log.require(field.characteristic() == 2, "characteristic must be 2");
            log.require(fp.d == 3, "diameter must be 3");
            for (const char* k : {"h", "hstar", "s", "sstar", "r"}) log.require_nonzero(fp, k);
            log.require(s != one_f, "s = 1");
            log.require(ss != one_f, "sstar = 1");
            log.require(r != s + ss, "r = s + sstar");
            log.require(r != s * (one_f + ss), "r = s(1 + sstar)");
            log.require(r != ss * (one_f + s), "r = sstar(1 + s)");
            break;
        }
    }
    return log.take();
}

ParameterArray make_family_unchecked(const FamilyParams& fp, const FieldSpec& field) {
    const std::int64_t d = static_cast<std::int64_t>(fp.d);
    const FieldElement one = FieldElement::one(field);
    const FieldElement th0 = fp.at("theta0"), ths0 = fp.at("thetastar0");
    std::vector<FieldElement> th, ths, vph, ph;

    auto push_all = [&](auto&& theta_of, auto&& theta_star_of, auto&& varphi_of,
                        auto&& phi_of) {
        for (std::int64_t i = 0; i <= d; ++i) {
            th.push_back(theta_of(i));
            ths.push_back(theta_star_of(i));
        }
        for (std::int64_t i = 1; i <= d; ++i) {
            vph.push_back(varphi_of(i));
            ph.push_back(phi_of(i));
        }
    };

    switch (fp.tag) {
        case FamilyTag::QRacah: {
            const auto &q = fp.at("q"), &h = fp.at("h"), &hs = fp.at("hstar"),
                       &s = fp.at("s"), &ss = fp.at("sstar"), &r1 = fp.at("r1"),
                       &r2 = fp.at("r2");
            push_all(
                [&](std::int64_t i) {
                    return th0 + h * (one - q.pow(i)) * (one - s * q.pow(i + 1)) / q.pow(i);
                },
                [&](std::int64_t i) {
                    return ths0 + hs * (one - q.pow(i)) * (one - ss * q.pow(i + 1)) / q.pow(i);
                },
                [&](std::int64_t i) {
                    return h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1)) * (one - r1 * q.pow(i)) *
                           (one - r2 * q.pow(i));
                },
                [&](std::int64_t i) {
                    return h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1)) * (r1 - ss * q.pow(i)) *
                           (r2 - ss * q.pow(i)) / ss;
                });
            break;
        }
        case FamilyTag::QHahn: {
            const auto &q = fp.at("q"), &h = fp.at("h"), &hs = fp.at("hstar"),
                       &ss = fp.at("sstar"), &r = fp.at("r");
            push_all(
                [&](std::int64_t i) { return th0 + h * (one - q.pow(i)) / q.pow(i); },
                [&](std::int64_t i) {
                    return ths0 + hs * (one - q.pow(i)) * (one - ss * q.pow(i + 1)) / q.pow(i);
                },
                [&](std::int64_t i) {
                    return h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1)) * (one - r * q.pow(i));
                },
                [&](std::int64_t i) {
                    return -(h * hs * q.pow(1 - i) * (one - q.pow(i)) *
                             (one - q.pow(i - d - 1)) * (r - ss * q.pow(i)));
                });
            break;
        }
        case FamilyTag::DualQHahn: {
            const auto &q = fp.at("q"), &h = fp.at("h"), &hs = fp.at("hstar"),
                       &s = fp.at("s"), &r = fp.at("r");
            push_all(
                [&](std::int64_t i) {
                    return th0 + h * (one - q.pow(i)) * (one - s * q.pow(i + 1)) / q.pow(i);
                },
                [&](std::int64_t i) { return ths0 + hs * (one - q.pow(i)) / q.pow(i); },
                [&](std::int64_t i) {
                    return h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1)) * (one - r * q.pow(i));
                },
                [&](std::int64_t i) {
                    return h * hs * q.pow(d + 2 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1)) * (s - r * q.pow(i - d - 1));
                });
            break;
        }
        case FamilyTag::QuantumQKrawtchouk: {
            const auto &q = fp.at("q"), &hs = fp.at("hstar"), &s = fp.at("s"),
                       &r = fp.at("r");
            push_all(
                [&](std::int64_t i) { return th0 - s * q * (one - q.pow(i)); },
                [&](std::int64_t i) { return ths0 + hs * (one - q.pow(i)) / q.pow(i); },
                [&](std::int64_t i) {
                    return -(r * hs * q.pow(1 - i) * (one - q.pow(i)) *
                             (one - q.pow(i - d - 1)));
                },
                [&](std::int64_t i) {
                    return hs * q.pow(d + 2 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1)) * (s - r * q.pow(i - d - 1));
                });
            break;
        }
        case FamilyTag::QKrawtchouk: {
            const auto &q = fp.at("q"), &h = fp.at("h"), &hs = fp.at("hstar"),
                       &ss = fp.at("sstar");
            push_all(
                [&](std::int64_t i) { return th0 + h * (one - q.pow(i)) / q.pow(i); },
                [&](std::int64_t i) {
                    return ths0 + hs * (one - q.pow(i)) * (one - ss * q.pow(i + 1)) / q.pow(i);
                },
                [&](std::int64_t i) {
                    return h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1));
                },
                [&](std::int64_t i) {
                    return h * hs * ss * q * (one - q.pow(i)) * (one - q.pow(i - d - 1));
                });
            break;
        }
        case FamilyTag::AffineQKrawtchouk: {
            const auto &q = fp.at("q"), &h = fp.at("h"), &hs = fp.at("hstar"),
                       &r = fp.at("r");
            push_all(
                [&](std::int64_t i) { return th0 + h * (one - q.pow(i)) / q.pow(i); },
                [&](std::int64_t i) { return ths0 + hs * (one - q.pow(i)) / q.pow(i); },
                [&](std::int64_t i) {
                    return h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1)) * (one - r * q.pow(i));
                },
                [&](std::int64_t i) {
                    return -(h * hs * r * q.pow(1 - i) * (one - q.pow(i)) *
                             (one - q.pow(i - d - 1)));
                });
            break;
        }
        case FamilyTag::DualQKrawtchouk: {
            const auto &q = fp.at("q"), &h = fp.at("h"), &hs = fp.at("hstar"),
                       &s = fp.at("s");
            push_all(
                [&](std::int64_t i) {
                    return th0 + h * (one - q.pow(i)) * (one - s * q.pow(i + 1)) / q.pow(i);
                },
                [&](std::int64_t i) { return ths0 + hs * (one - q.pow(i)) / q.pow(i); },
                [&](std::int64_t i) {
                    return h * hs * q.pow(1 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1));
                },
                [&](std::int64_t i) {
                    return h * hs * s * q.pow(d + 2 - 2 * i) * (one - q.pow(i)) *
                           (one - q.pow(i - d - 1));
                });
            break;
        }
        case FamilyTag::Racah: {
            const auto &h = fp.at("h"), &hs = fp.at("hstar"), &s = fp.at("s"),
                       &ss = fp.at("sstar"), &r1 = fp.at("r1"), &r2 = fp.at("r2");
            push_all(
                [&](std::int64_t i) {
                    return th0 + h * f_int(field, i) * (f_int(field, i + 1) + s);
                },
                [&](std::int64_t i) {
                    return ths0 + hs * f_int(field, i) * (f_int(field, i + 1) + ss);
                },
                [&](std::int64_t i) {
                    return h * hs * f_int(field, i) * f_int(field, i - d - 1) *
                           (f_int(field, i) + r1) * (f_int(field, i) + r2);
                },
                [&](std::int64_t i) {
                    return h * hs * f_int(field, i) * f_int(field, i - d - 1) *
                           (f_int(field, i) + ss - r1) * (f_int(field, i) + ss - r2);
                });
            break;
        }
        case FamilyTag::Hahn: {
            const auto &hs = fp.at("hstar"), &s = fp.at("s"), &ss = fp.at("sstar"),
                       &r = fp.at("r");
            push_all(
                [&](std::int64_t i) { return th0 + s * f_int(field, i); },
                [&](std::int64_t i) {
                    return ths0 + hs * f_int(field, i) * (f_int(field, i + 1) + ss);
                },
                [&](std::int64_t i) {
                    return hs * s * f_int(field, i) * f_int(field, i - d - 1) *
                           (f_int(field, i) + r);
                },
                [&](std::int64_t i) {
                    return -(hs * s * f_int(field, i) * f_int(field, i - d - 1) *
                             (f_int(field, i) + ss - r));
                });
            break;
        }
        case FamilyTag::DualHahn: {
            const auto &h = fp.at("h"), &s = fp.at("s"), &ss = fp.at("sstar"),
                       &r = fp.at("r");
            push_all(
                [&](std::int64_t i) {
                    return th0 + h * f_int(field, i) * (f_int(field, i + 1) + s);
                },
                [&](std::int64_t i) { return ths0 + ss * f_int(field, i); },
                [&](std::int64_t i) {
                    return h * ss * f_int(field, i) * f_int(field, i - d - 1) *
                           (f_int(field, i) + r);
                },
                [&](std::int64_t i) {
                    return h * ss * f_int(field, i) * f_int(field, i - d - 1) *
                           (f_int(field, i) + r - s - f_int(field, d + 1));
                });
            break;
        }
        case FamilyTag::Krawtchouk: {
            const auto &s = fp.at("s"), &ss = fp.at("sstar"), &r = fp.at("r");
            push_all(
                [&](std::int64_t i) { return th0 + s * f_int(field, i); },
                [&](std::int64_t i) { return ths0 + ss * f_int(field, i); },
                [&](std::int64_t i) {
                    return r * f_int(field, i) * f_int(field, i - d - 1);
                },
                [&](std::int64_t i) {
                    return (r - s * ss) * f_int(field, i) * f_int(field, i - d - 1);
                });
            break;
        }
        case FamilyTag::BannaiIto: {
            const auto &h = fp.at("h"), &hs = fp.at("hstar"), &s = fp.at("s"),
                       &ss = fp.at("sstar"), &r1 = fp.at("r1"), &r2 = fp.at("r2");
            const FieldElement four = f_int(field, 4);
            const bool d_even = d % 2 == 0;
            push_all(
                [&](std::int64_t i) {
                    const FieldElement sign = f_int(field, i % 2 == 0 ? 1 : -1);
                    return th0 + h * (s - one + (one - s + f_int(field, 2 * i)) * sign);
                },
                [&](std::int64_t i) {
                    const FieldElement sign = f_int(field, i % 2 == 0 ? 1 : -1);
                    return ths0 + hs * (ss - one + (one - ss + f_int(field, 2 * i)) * sign);
                },
                [&](std::int64_t i) {
                    const FieldElement fi = f_int(field, i);
                    if (d_even && i % 2 == 0) return -(four * h * hs * fi * (fi + r1));
                    if (d_even) return -(four * h * hs * f_int(field, i - d - 1) * (fi + r2));
                    if (i % 2 == 0) return -(four * h * hs * fi * f_int(field, i - d - 1));
                    return -(four * h * hs * (fi + r1) * (fi + r2));
                },
                [&](std::int64_t i) {
                    const FieldElement fi = f_int(field, i);
                    if (d_even && i % 2 == 0) return four * h * hs * fi * (fi - ss - r1);
                    if (d_even)
                        return four * h * hs * f_int(field, i - d - 1) * (fi - ss - r2);
                    if (i % 2 == 0) return -(four * h * hs * fi * f_int(field, i - d - 1));
                    return -(four * h * hs * (fi - ss - r1) * (fi - ss - r2));
                });
            break;
        }
        case FamilyTag::Orphan: {
            const auto &h = fp.at("h"), &hs = fp.at("hstar"), &s = fp.at("s"),
                       &ss = fp.at("sstar"), &r = fp.at("r");
            const int gamma[4] = {0, 1, 1, 0};
            push_all(
                [&](std::int64_t i) {
                    return th0 + h * (s * f_int(field, i) + f_int(field, gamma[i]));
                },
                [&](std::int64_t i) {
                    return ths0 + hs * (ss * f_int(field, i) + f_int(field, gamma[i]));
                },
                [&](std::int64_t i) {
                    if (i == 1) return h * hs * r;
                    if (i == 2) return h * hs;
                    return h * hs * (r + s + ss);
                },
                [&](std::int64_t i) {
                    if (i == 1) return h * hs * (r + s * (one + ss));
                    if (i == 2) return h * hs;
                    return h * hs * (r + ss * (one + s));
                });
            break;
        }
    }
    return ParameterArray(field, th, ths, vph, ph);
}

ParameterArray make_family(const FamilyParams& fp, const FieldSpec& field) {
    auto violations = family_preconditions(fp, field);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "inadmissible " << family_name(fp.tag) << " parameters:";
        for (const auto& v : violations) msg << " [" << v << "]";
        throw std::invalid_argument(msg.str());
    }
    ParameterArray pa = make_family_unchecked(fp, field);
    if (!is_valid(pa))
        throw std::logic_error("admissible parameters produced an invalid array");
    return pa;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

struct CaseFit {
    FieldElement eta, mu, h;
};

FamilyParams base_params(FamilyTag tag, std::size_t d, const ParameterArray& pa) {
    FamilyParams fp;
    fp.tag = tag;
    fp.d = d;
    fp.values["theta0"] = pa.theta[0];
    fp.values["thetastar0"] = pa.theta_star[0];
    return fp;
}

class Recovery {
public:
    explicit Recovery(const ParameterArray& pa)
        : pa_(pa), field_(pa.field), one_(FieldElement::one(pa.field)),
          zero_(FieldElement::zero(pa.field)) {}

    std::vector<FamilyParams> matches;
    bool extension_required = false;
    std::optional<QuadraticWitness> extension_quadratic;

    void try_params(FamilyParams fp) {
        try {
            if (make_family(fp, field_) == pa_) {
                for (const auto& m : matches)
                    if (m == fp) return;
                matches.push_back(std::move(fp));
            }
        } catch (const std::invalid_argument&) {
            // inadmissible parameter recovery; not a match
        }
    }

    void note_unsolvable(const FieldElement& a, const FieldElement& b,
                         const FieldElement& c) {
        extension_required = true;
        if (!extension_quadratic) extension_quadratic = QuadraticWitness{a, b, c};
    }

    // theta_i = eta + mu q^i + h q^{-i} fits, given q not in {0, 1, -1}.
    std::vector<CaseFit> fits_case1(const std::vector<FieldElement>& seq,
                                    const FieldElement& q) const {
        const std::size_t d = pa_.d;
        std::vector<CaseFit> fits;
        if (d >= 2) {
            Matrix sys(field_, 3, 3), rhs(field_, 3, 1);
            for (std::size_t i = 0; i < 3; ++i) {
                sys.set(i, 0, one_);
                sys.set(i, 1, q.pow(static_cast<std::int64_t>(i)));
                sys.set(i, 2, q.pow(-static_cast<std::int64_t>(i)));
                rhs.set(i, 0, seq[i]);
            }
            auto sol = solve_linear(sys, rhs);
            if (!sol) return fits;
            CaseFit fit{sol->at(0, 0), sol->at(1, 0), sol->at(2, 0)};
            for (std::size_t i = 0; i <= d; ++i)
                if (seq[i] != fit.eta + fit.mu * q.pow(static_cast<std::int64_t>(i)) +
                                  fit.h * q.pow(-static_cast<std::int64_t>(i)))
                    return fits;
            fits.push_back(fit);
        } else if (d == 1) {
            const FieldElement delta = seq[1] - seq[0];
            fits.push_back({seq[0] - delta / (q - one_), delta / (q - one_), zero_});
            fits.push_back({seq[0] - delta / (q.inverse() - one_), zero_,
                            delta / (q.inverse() - one_)});
            const FieldElement both = q + q.inverse() - f_int(field_, 2);
            if (!both.is_zero()) {
                const FieldElement m = delta / both;
                fits.push_back({seq[0] - m - m, m, m});
            }
        }
        return fits;
    }

    // theta_i = eta + (mu + h) i + h i^2 (characteristic not 2 handled by caller).
    std::vector<CaseFit> fits_case2(const std::vector<FieldElement>& seq) const {
        const std::size_t d = pa_.d;
        std::vector<CaseFit> fits;
        if (d >= 2) {
            const FieldElement two = f_int(field_, 2);
            if (two.is_zero()) return fits;
            const FieldElement h = (seq[2] - seq[1] - seq[1] + seq[0]) / two;
            const FieldElement mu = seq[1] - seq[0] - h - h;
            for (std::size_t i = 0; i <= d; ++i) {
                const FieldElement fi = f_int(field_, static_cast<std::int64_t>(i));
                if (seq[i] != seq[0] + (mu + h) * fi + h * fi * fi) return fits;
            }
            fits.push_back({seq[0], mu, h});
        } else if (d == 1) {
            const FieldElement delta = seq[1] - seq[0];
            fits.push_back({seq[0], delta, zero_});
            const FieldElement two = f_int(field_, 2), three = f_int(field_, 3);
            if (!two.is_zero()) fits.push_back({seq[0], zero_, delta / two});
            if (!three.is_zero()) {
                const FieldElement h = delta / three;
                fits.push_back({seq[0], h, h});
            }
        }
        return fits;
    }

    // theta_i = eta + mu (-1)^i + 2 h i (-1)^i.
    std::vector<CaseFit> fits_case3(const std::vector<FieldElement>& seq) const {
        const std::size_t d = pa_.d;
        std::vector<CaseFit> fits;
        const FieldElement two = f_int(field_, 2), four = f_int(field_, 4);
        if (two.is_zero()) return fits;
        if (d >= 2) {
            const FieldElement h = (seq[2] - seq[0]) / four;
            const FieldElement mu = (seq[0] - seq[1]) / two - h;
            const FieldElement eta = seq[0] - mu;
            for (std::size_t i = 0; i <= d; ++i) {
                const FieldElement sign = f_int(field_, i % 2 == 0 ? 1 : -1);
                const FieldElement fi = f_int(field_, static_cast<std::int64_t>(i));
                if (seq[i] != eta + mu * sign + two * h * fi * sign) return fits;
            }
            fits.push_back({eta, mu, h});
        } else if (d == 1) {
            const FieldElement delta = seq[0] - seq[1]; // = 2 mu + 2 h
            {
                const FieldElement h = delta / two;
                fits.push_back({seq[0], zero_, h});
            }
            {
                const FieldElement h = delta / four;
                fits.push_back({seq[0] - h, h, h});
            }
        }
        return fits;
    }

    void case1_subcases(const FieldElement& q, const CaseFit& f, const CaseFit& g) {
        const std::size_t d = pa_.d;
        const std::int64_t dl = static_cast<std::int64_t>(d);
        const FieldElement qd = q.pow(dl);
        if (qd == one_ || q == one_ || q == -one_ || q.is_zero()) return;
        const FieldElement mu = f.mu, h = f.h, mus = g.mu, hs = g.h;
        const FieldElement tau = pa_.varphi[0] / ((q - one_) * (qd - one_)) + mu * mus +
                                 h * hs * q.pow(-1 - dl);
        // The split sequences must follow the case-I shape for this
        // orientation; otherwise the fit is spurious (possible for d <= 2).
        for (std::int64_t i = 1; i <= dl; ++i) {
            const FieldElement frame = (q.pow(i) - one_) * (q.pow(dl - i + 1) - one_);
            if (pa_.varphi[i - 1] !=
                frame * (tau - mu * mus * q.pow(i - 1) - h * hs * q.pow(-i - dl)))
                return;
            if (pa_.phi[i - 1] !=
                frame * (tau - h * mus * q.pow(i - dl - 1) - mu * hs * q.pow(-i)))
                return;
        }

        const bool mu0 = mu.is_zero(), h0 = h.is_zero();
        const bool mus0 = mus.is_zero(), hs0 = hs.is_zero();
        const bool tau0 = tau.is_zero();

        if (!mu0 && !mus0 && !h0 && !hs0) {
            FamilyParams fp = base_params(FamilyTag::QRacah, d, pa_);
            fp.values["q"] = q;
            fp.values["h"] = h;
            fp.values["hstar"] = hs;
            const FieldElement s = mu / (h * q), ss = mus / (hs * q);
            fp.values["s"] = s;
            fp.values["sstar"] = ss;
            const FieldElement sum = tau / (h * hs) * qd;
            const FieldElement prod = s * ss * q.pow(dl + 1);
            auto roots = solve_quadratic(one_, -sum, prod);
            if (roots.empty()) {
                note_unsolvable(one_, -sum, prod);
            } else {
                fp.values["r1"] = roots.front();
                fp.values["r2"] = roots.size() > 1 ? roots[1] : roots[0];
                try_params(fp);
            }
        }
        if (mu0 && !mus0 && !h0 && !hs0 && !tau0) {
            FamilyParams fp = base_params(FamilyTag::QHahn, d, pa_);
            fp.values["q"] = q;
            fp.values["h"] = h;
            fp.values["hstar"] = hs;
            fp.values["sstar"] = mus / (hs * q);
            fp.values["r"] = tau * qd / (h * hs);
            try_params(fp);
        }
        if (!mu0 && mus0 && !h0 && !hs0 && !tau0) {
            FamilyParams fp = base_params(FamilyTag::DualQHahn, d, pa_);
            fp.values["q"] = q;
            fp.values["h"] = h;
            fp.values["hstar"] = hs;
            fp.values["s"] = mu / (h * q);
            fp.values["r"] = tau * qd / (h * hs);
            try_params(fp);
        }
        if (!mu0 && mus0 && h0 && !hs0 && !tau0) {
            FamilyParams fp = base_params(FamilyTag::QuantumQKrawtchouk, d, pa_);
            fp.values["q"] = q;
            fp.values["hstar"] = hs;
            fp.values["s"] = mu / q;
            fp.values["r"] = tau * qd / hs;
            try_params(fp);
        }
        if (mu0 && !mus0 && !h0 && !hs0 && tau0) {
            FamilyParams fp = base_params(FamilyTag::QKrawtchouk, d, pa_);
            fp.values["q"] = q;
            fp.values["h"] = h;
            fp.values["hstar"] = hs;
            fp.values["sstar"] = mus / (hs * q);
            try_params(fp);
        }
        if (mu0 && mus0 && !h0 && !hs0 && !tau0) {
            FamilyParams fp = base_params(FamilyTag::AffineQKrawtchouk, d, pa_);
            fp.values["q"] = q;
            fp.values["h"] = h;
            fp.values["hstar"] = hs;
            fp.values["r"] = tau * qd / (h * hs);
            try_params(fp);
        }
        if (!mu0 && mus0 && !h0 && !hs0 && tau0) {
            FamilyParams fp = base_params(FamilyTag::DualQKrawtchouk, d, pa_);
            fp.values["q"] = q;
            fp.values["h"] = h;
            fp.values["hstar"] = hs;
            fp.values["s"] = mu / (h * q);
            try_params(fp);
        }
    }

    void run_case1(const FieldElement& q) {
        for (const auto& f : fits_case1(pa_.theta, q))
            for (const auto& g : fits_case1(pa_.theta_star, q)) case1_subcases(q, f, g);
    }

    void case2_subcases(const CaseFit& f, const CaseFit& g) {
        const std::size_t d = pa_.d;
        const std::int64_t dl = static_cast<std::int64_t>(d);
        const FieldElement df = f_int(field_, dl);
        if (df.is_zero()) return;
        const FieldElement mu = f.mu, h = f.h, mus = g.mu, hs = g.h;
        const FieldElement tau =
            pa_.varphi[0] / df + (mu * hs + h * mus) + h * hs * f_int(field_, dl + 2);
        for (std::int64_t i = 1; i <= dl; ++i) {
            const FieldElement fi = f_int(field_, i);
            const FieldElement frame = fi * f_int(field_, dl - i + 1);
            if (pa_.varphi[i - 1] !=
                frame * (tau - (mu * hs + h * mus) * fi - h * hs * fi * f_int(field_, i + dl + 1)))
                return;
            if (pa_.phi[i - 1] !=
                frame * (tau + mu * mus + h * mus * f_int(field_, 1 + dl) +
                         (mu * hs - h * mus) * fi + h * hs * fi * f_int(field_, dl - i + 1)))
                return;
        }

        const bool h0 = h.is_zero(), hs0 = hs.is_zero();
        if (!h0 && !hs0) {
            FamilyParams fp = base_params(FamilyTag::Racah, d, pa_);
            fp.values["h"] = h;
            fp.values["hstar"] = hs;
            const FieldElement s = mu / h, ss = mus / hs;
            fp.values["s"] = s;
            fp.values["sstar"] = ss;
            const FieldElement sum = s + ss + f_int(field_, dl + 1);
            const FieldElement prod = -(tau / (h * hs));
            auto roots = solve_quadratic(one_, -sum, prod);
            if (roots.empty()) {
                note_unsolvable(one_, -sum, prod);
            } else {
                fp.values["r1"] = roots.front();
                fp.values["r2"] = roots.size() > 1 ? roots[1] : roots[0];
                try_params(fp);
            }
        }
        if (h0 && !hs0 && !mu.is_zero()) {
            FamilyParams fp = base_params(FamilyTag::Hahn, d, pa_);
            fp.values["hstar"] = hs;
            fp.values["s"] = mu;
            fp.values["sstar"] = mus / hs;
            fp.values["r"] = -(tau / (mu * hs));
            try_params(fp);
        }
        if (!h0 && hs0 && !mus.is_zero()) {
            FamilyParams fp = base_params(FamilyTag::DualHahn, d, pa_);
            fp.values["h"] = h;
            fp.values["s"] = mu / h;
            fp.values["sstar"] = mus;
            fp.values["r"] = -(tau / (h * mus));
            try_params(fp);
        }
        if (h0 && hs0) {
            FamilyParams fp = base_params(FamilyTag::Krawtchouk, d, pa_);
            fp.values["s"] = mu;
            fp.values["sstar"] = mus;
            fp.values["r"] = -tau;
            try_params(fp);
        }
    }

    void run_case2() {
        for (const auto& f : fits_case2(pa_.theta))
            for (const auto& g : fits_case2(pa_.theta_star)) case2_subcases(f, g);
    }

    void case3_subcases(const CaseFit& f, const CaseFit& g) {
        const std::size_t d = pa_.d;
        const std::int64_t dl = static_cast<std::int64_t>(d);
        const FieldElement mu = f.mu, h = f.h, mus = g.mu, hs = g.h;
        if (h.is_zero() || hs.is_zero()) return;
        const FieldElement four_hhs = f_int(field_, 4) * h * hs;
        FamilyParams fp = base_params(FamilyTag::BannaiIto, d, pa_);
        fp.values["h"] = h;
        fp.values["hstar"] = hs;
        const FieldElement s = one_ - mu / h, ss = one_ - mus / hs;
        fp.values["s"] = s;
        fp.values["sstar"] = ss;
        const FieldElement sum = f_int(field_, dl + 1) - s - ss;
        if (dl % 2 == 1) {
            // (1 + r1)(1 + r2) = -varphi_1 / (4 h h*)
            const FieldElement p1 = -(pa_.varphi[0] / four_hhs);
            const FieldElement prod = p1 - one_ - sum;
            auto roots = solve_quadratic(one_, -sum, prod);
            if (roots.empty()) {
                note_unsolvable(one_, -sum, prod);
                return;
            }
            fp.values["r1"] = roots.front();
            fp.values["r2"] = roots.size() > 1 ? roots[1] : roots[0];
        } else {
            const FieldElement df = f_int(field_, dl);
            if (df.is_zero()) return;
            const FieldElement r2 = -one_ + pa_.varphi[0] / (four_hhs * df);
            fp.values["r2"] = r2;
            fp.values["r1"] = sum - r2;
        }
        try_params(fp);
    }

    void run_case3() {
        for (const auto& f : fits_case3(pa_.theta))
            for (const auto& g : fits_case3(pa_.theta_star)) case3_subcases(f, g);
    }

    void run_case4() {
        if (pa_.d != 3 || field_.characteristic() != 2) return;
        const FieldElement h = pa_.theta[0] + pa_.theta[2];
        const FieldElement hs = pa_.theta_star[0] + pa_.theta_star[2];
        if (h.is_zero() || hs.is_zero()) return;
        const FieldElement s = (pa_.theta[0] + pa_.theta[3]) / h;
        const FieldElement ss = (pa_.theta_star[0] + pa_.theta_star[3]) / hs;
        if (pa_.theta[1] != pa_.theta[0] + h * (s + one_)) return;
        if (pa_.theta_star[1] != pa_.theta_star[0] + hs * (ss + one_)) return;
        FamilyParams fp = base_params(FamilyTag::Orphan, 3, pa_);
        fp.values["h"] = h;
        fp.values["hstar"] = hs;
        fp.values["s"] = s;
        fp.values["sstar"] = ss;
        fp.values["r"] = pa_.varphi[0] / (h * hs);
        try_params(fp);
    }

    // Deterministic q candidates for the underdetermined small diameters.
    std::vector<FieldElement> q_candidates() const {
        std::vector<FieldElement> out;
        auto admissible = [&](const FieldElement& q) {
            return !q.is_zero() && q != one_ && q != -one_;
        };
        if (field_.kind() == FieldKind::Rationals) {
            out.push_back(f_int(field_, 2));
            out.push_back(FieldElement::from_rational(field_, 1, 2));
            out.push_back(f_int(field_, 3));
            out.push_back(FieldElement::from_rational(field_, 1, 3));
        } else {
            for (std::int64_t v = 2; v < field_.order() && out.size() < 8; ++v) {
                const FieldElement q = FieldElement::from_raw(field_, static_cast<std::uint64_t>(v));
                if (admissible(q)) {
                    out.push_back(q);
                    if (!out.back().is_zero()) out.push_back(q.inverse());
                }
            }
        }
        std::vector<FieldElement> dedup;
        for (const auto& q : out)
            if (admissible(q) && std::find(dedup.begin(), dedup.end(), q) == dedup.end())
                dedup.push_back(q);
        return dedup;
    }

    void run_small_d0() {
        // No split sequences to match; any admissible parameter choice fits.
        for (const auto& q : q_candidates()) {
            for (FamilyTag tag :
                 {FamilyTag::QRacah, FamilyTag::QHahn, FamilyTag::DualQHahn,
                  FamilyTag::QuantumQKrawtchouk, FamilyTag::QKrawtchouk,
                  FamilyTag::AffineQKrawtchouk, FamilyTag::DualQKrawtchouk}) {
                FamilyParams fp = base_params(tag, 0, pa_);
                fp.values["q"] = q;
                for (const auto& name : family_param_names(tag))
                    if (!fp.values.count(name)) fp.values[name] = one_;
                if (tag == FamilyTag::QRacah) fp.values["r1"] = q; // r1 r2 = s sstar q
                try_params(fp);
            }
            if (!matches.empty()) break; // one q suffices at diameter 0
        }
        for (std::int64_t rv : {2, 3, 5}) {
            FamilyParams fp = base_params(FamilyTag::Krawtchouk, 0, pa_);
            fp.values["s"] = one_;
            fp.values["sstar"] = one_;
            fp.values["r"] = f_int(field_, rv);
            try_params(fp);
        }
        for (std::int64_t r2v : {1, 2, 3}) {
            FamilyParams fp = base_params(FamilyTag::Racah, 0, pa_);
            fp.values["h"] = one_;
            fp.values["hstar"] = one_;
            fp.values["s"] = one_;
            fp.values["sstar"] = one_;
            fp.values["r2"] = f_int(field_, r2v);
            fp.values["r1"] = f_int(field_, 3) - fp.values.at("r2"); // s + sstar + d + 1
            try_params(fp);
            FamilyParams hp = base_params(FamilyTag::Hahn, 0, pa_);
            hp.values["hstar"] = one_;
            hp.values["s"] = one_;
            hp.values["sstar"] = one_;
            hp.values["r"] = f_int(field_, r2v);
            try_params(hp);
            FamilyParams dp = base_params(FamilyTag::DualHahn, 0, pa_);
            dp.values["h"] = one_;
            dp.values["s"] = one_;
            dp.values["sstar"] = one_;
            dp.values["r"] = f_int(field_, r2v);
            try_params(dp);
            FamilyParams bp = base_params(FamilyTag::BannaiIto, 0, pa_);
            bp.values["h"] = one_;
            bp.values["hstar"] = one_;
            bp.values["s"] = one_;
            bp.values["sstar"] = one_;
            bp.values["r2"] = f_int(field_, r2v);
            bp.values["r1"] = -one_ - bp.values.at("r2"); // -s - sstar + d + 1
            try_params(bp);
        }
    }

    const ParameterArray& pa_;
    FieldSpec field_;
    FieldElement one_, zero_;
};

std::string case_of_family(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::QRacah:
        case FamilyTag::QHahn:
        case FamilyTag::DualQHahn:
        case FamilyTag::QuantumQKrawtchouk:
        case FamilyTag::QKrawtchouk:
        case FamilyTag::AffineQKrawtchouk:
        case FamilyTag::DualQKrawtchouk:
            return "I";
        case FamilyTag::Racah:
        case FamilyTag::Hahn:
        case FamilyTag::DualHahn:
        case FamilyTag::Krawtchouk:
            return "II";
        case FamilyTag::BannaiIto:
            return "III";
        case FamilyTag::Orphan:
            return "IV";
    }
    return "?";
}

void sort_matches(std::vector<FamilyParams>& matches) {
    std::stable_sort(matches.begin(), matches.end(),
                     [](const FamilyParams& a, const FamilyParams& b) {
                         return family_order(a.tag) < family_order(b.tag);
                     });
}

} // namespace

ClassificationResult classify(const ParameterArray& pa) {
    if (!is_valid(pa))
        throw std::invalid_argument("parameter array fails validation");
    const FieldSpec& f = pa.field;
    const FieldElement one = FieldElement::one(f);
    ClassificationResult result;
    Recovery rec(pa);

    if (pa.d >= 3) {
        const FieldElement xi = *beta_plus_one(pa);
        const FieldElement beta = xi - one;
        const FieldElement two = FieldElement::from_integer(f, 2);
        if (f.characteristic() == 2 && beta.is_zero()) {
            result.case_label = "IV";
            rec.run_case4();
        } else if (f.characteristic() != 2 && beta == two) {
            result.case_label = "II";
            rec.run_case2();
        } else if (f.characteristic() != 2 && beta == -two) {
            result.case_label = "III";
            rec.run_case3();
        } else {
            result.case_label = "I";
            auto roots = solve_quadratic(one, -beta, one);
            if (roots.empty())
                rec.note_unsolvable(one, -beta, one);
            else
                for (const auto& q : roots) rec.run_case1(q);
        }
    } else if (pa.d == 0) {
        rec.run_small_d0();
    } else {
        for (const auto& q : rec.q_candidates()) rec.run_case1(q);
        if (char_exceeds(f, static_cast<std::int64_t>(pa.d))) rec.run_case2();
        if (f.characteristic() != 2 &&
            char_exceeds(f, static_cast<std::int64_t>(pa.d) / 2))
            rec.run_case3();
    }

    result.matches = std::move(rec.matches);
    result.extension_required = rec.extension_required;
    result.extension_quadratic = rec.extension_quadratic;
    sort_matches(result.matches);
    if (result.case_label.empty())
        result.case_label = result.matches.empty()
                                ? "I"
                                : case_of_family(result.matches.front().tag);
    return result;
}

// ---------------------------------------------------------------------------
// Hypergeometric sums
// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kTerminationLimit = 1024;

bool kind_is_basic(HypergeomKind kind) {
    return kind == HypergeomKind::Phi21 || kind == HypergeomKind::Phi32 ||
           kind == HypergeomKind::Phi43;
}

std::size_t kind_numerator_count(HypergeomKind kind) {
    switch (kind) {
        case HypergeomKind::F21:
        case HypergeomKind::Phi21: return 2;
        case HypergeomKind::F32:
        case HypergeomKind::Phi32: return 3;
        case HypergeomKind::F43:
        case HypergeomKind::Phi43: return 4;
    }
    return 0;
}

} // namespace

FieldElement hypergeom(HypergeomKind kind, const std::vector<FieldElement>& numerator,
                       const std::vector<FieldElement>& denominator,
                       const FieldElement& argument,
                       const std::optional<FieldElement>& q) {
    const FieldSpec& f = argument.field();
    const FieldElement one = FieldElement::one(f);
    if (numerator.size() != kind_numerator_count(kind) ||
        denominator.size() + 1 != numerator.size())
        throw std::invalid_argument("wrong parameter counts for hypergeometric kind");
    const bool basic = kind_is_basic(kind);
    if (basic && !q) throw std::invalid_argument("basic hypergeometric sum needs q");

    // Find the first vanishing numerator factor.
    std::int64_t terminate = -1;
    for (const auto& a : numerator) {
        FieldElement acc = a;
        for (std::int64_t n = 0; n < kTerminationLimit; ++n) {
            const bool hits = basic ? (acc == one) : acc.is_zero();
            if (hits) {
                if (terminate < 0 || n < terminate) terminate = n;
                break;
            }
            acc = basic ? acc * *q : acc + one;
        }
    }
    if (terminate < 0) throw std::invalid_argument("hypergeometric series does not terminate");

    FieldElement sum = one, term = one;
    for (std::int64_t n = 1; n <= terminate; ++n) {
        const FieldElement nf = FieldElement::from_integer(f, n);
        if (basic) {
            for (const auto& a : numerator) term *= one - a * q->pow(n - 1);
            for (const auto& b : denominator) {
                const FieldElement factor = one - b * q->pow(n - 1);
                if (factor.is_zero())
                    throw std::domain_error("denominator factor vanishes before termination");
                term /= factor;
            }
            const FieldElement qfact = one - q->pow(n);
            if (qfact.is_zero())
                throw std::domain_error("q-factorial factor vanishes before termination");
            term = term * argument / qfact;
        } else {
            for (const auto& a : numerator) term *= a + nf - one;
            for (const auto& b : denominator) {
                const FieldElement factor = b + nf - one;
                if (factor.is_zero())
                    throw std::domain_error("denominator factor vanishes before termination");
                term /= factor;
            }
            if (nf.is_zero())
                throw std::domain_error("factorial not invertible in this characteristic");
            term = term * argument / nf;
        }
        sum += term;
    }
    return sum;
}

} // namespace leonard
