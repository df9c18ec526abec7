#include "scurve/reference_tables.hpp"

namespace scurve::reference {

const char* const kMisprintMember = "acdba";
const char* const kMisprintActual = "acdbe";

const std::vector<std::vector<std::vector<std::string>>>& five_gon_class_tables() {
    static const std::vector<std::vector<std::vector<std::string>>> tables = {
        // type 1
        {
            {"abcde"},
            {"abced", "abdce", "acbde", "acdeb", "aebcd"},
            {"abdec", "abecd", "acdba", "adbce", "adebc"},
            {"abedc", "adcbe", "adecb", "aecdb", "aedbc"},
            {"acebd"},
            {"acedb", "acbed", "adceb", "aebdc", "aecbd"},
            {"adbec"},
            {"aedcb"},
        },
        // type 2
        {
            {"abcde"},
            {"abced", "aebcd"},
            {"abdce", "acdeb"},
            {"abdec", "acdbe"},
            {"abecd"},
            {"abedc", "aecdb"},
            {"acbde"},
            {"acbed", "aecbd"},
            {"acebd"},
            {"acedb", "aebdc"},
            {"adbce", "adebc"},
            {"adbec"},
            {"adcbe", "adecb"},
            {"adceb"},
            {"aedbc"},
            {"aedcb"},
        },
        // type 3
        {
            {"abcde"},
            {"abced"},
            {"abdce", "aebcd"},
            {"abdec", "adebc"},
            {"abecd", "adbce"},
            {"abedc", "aedbc"},
            {"acbde", "acdeb"},
            {"acbed", "acedb"},
            {"acdbe"},
            {"acebd"},
            {"adbec"},
            {"adcbe", "aecdb"},
            {"adceb", "aecbd"},
            {"adecb"},
            {"aebdc"},
            {"aedcb"},
        },
        // type 4
        {
            {"abcde"},
            {"abced", "abdce"},
            {"abdec", "abecd"},
            {"abedc"},
            {"acbde", "aebcd"},
            {"acbed", "aebdc"},
            {"acdbe", "adebc"},
            {"acdeb"},
            {"acebd"},
            {"acedb", "adceb"},
            {"adbce"},
            {"adbec"},
            {"adcbe", "aedbc"},
            {"adecb", "aecdb"},
            {"aecbd"},
            {"aedcb"},
        },
    };
    return tables;
}

const std::vector<std::string>& shared_side_e_type2() {
    static const std::vector<std::string> list = {
        "2abced", "2abecd", "2abedc", "2acbed",
        "2acebd", "2acedb", "2aedbc", "2aedcb",
    };
    return list;
}

const std::vector<std::string>& shared_side_e_type4() {
    static const std::vector<std::string> list = {
        "4abced", "4abedc", "4acbed", "4acebd",
        "4acedb", "4aecbd", "4aedcb",
    };
    return list;
}

const std::vector<std::string>& shared_side_d_type4() {
    static const std::vector<std::string> list = {
        "4abcde", "4abdec", "4acbde", "4acdbe",
        "4acdeb", "4adbec", "4adecb", "4aecbd",
    };
    return list;
}

const std::vector<std::string>& shared_side_c_type4() {
    static const std::vector<std::string> list = {
        "4abdec", "4abedc", "4acbde", "4acbed", "4acebd",
        "4adcbe", "4adecb", "4aecbd", "4aedcb",
    };
    return list;
}

}  // namespace scurve::reference
