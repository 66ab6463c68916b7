#include "ordpoly/scan.hpp"

namespace ordpoly {

// Reference Ehrhart polynomials of O_{P_{m,n}}, coefficient strings ascending
// by degree, transcribed once from the published table.
const std::vector<Table1Row>& table1_fixtures() {
    static const std::vector<Table1Row> rows = {
        {6, 6,
         {"1", "75/22", "824/77", "160/7", "181/6", "765/28", "127/7", "9", "93/28", "25/28",
          "1/6", "3/154", "1/924"}},
        {6, 7,
         {"1", "61751/15015", "555/44", "928/33", "83/2", "1273/30", "255/8", "127/7", "63/8",
          "31/12", "5/8", "7/66", "1/88", "1/1716"}},
        {7, 7,
         {"1", "-3041/1430", "18397/4290", "1365/44", "602/11", "301/5", "8953/180", "255/8",
          "127/8", "49/8", "217/120", "35/88", "49/792", "7/1144", "1/3432"}},
        {7, 8,
         {"1", "-1633/2145", "11261/2860", "208909/6435", "6125/88", "14441/165", "959/12",
          "5113/90", "255/8", "127/9", "49/10", "217/165", "35/132", "49/1287", "1/286",
          "1/6435"}},
        {8, 8,
         {"1", "-9905/286", "-81704/2145", "18740/429", "137692/1287", "1358/11", "57736/495",
          "1364/15", "511/9", "85/3", "508/45", "196/55", "434/495", "70/429", "28/1287",
          "4/2145", "1/12870"}},
        {8, 9,
         {"1", "-1063343/36465", "-29713/572", "126224/6435", "17882/143", "75956/429",
          "1967/11", "24644/165", "1023/10", "511/9", "51/2", "508/55", "147/55", "434/715",
          "15/143", "28/2145", "3/2860", "1/24310"}},
        {9, 9,
         {"1", "-1285677/4862", "-7364613/24310", "89157/572", "246946/715", "195381/715",
          "173242/715", "2439/11", "9204/55", "1023/10", "511/10", "459/22", "381/55",
          "1323/715", "279/715", "9/143", "21/2860", "27/48620", "1/48620"}},
        {9, 10,
         {"1", "-220154521/969969", "-20069739/48620", "-454951/12155", "453525/1144",
          "64414/143", "548577/1430", "1718664/5005", "3060/11", "12277/66", "1023/10",
          "511/11", "765/44", "762/143", "189/143", "186/715", "45/1144", "21/4862", "3/9724",
          "1/92378"}},
        {10, 10,
         {"1", "-135276175/58786", "-2250043660/969969", "4024062/2431", "11364453/4862",
          "461265/572", "150248/429", "445884/1001", "426227/1001", "6825/22", "2047/11", "93",
          "2555/66", "3825/286", "3810/1001", "126/143", "93/572", "225/9724", "35/14586",
          "15/92378", "1/184756"}},
    };
    return rows;
}

Table1Report run_table1() {
    Table1Report report;
    for (const Table1Row& row : table1_fixtures()) {
        ++report.rows_checked;
        const EhrhartPolynomial e = ehrhart_pmn(row.m, row.n);
        const int dim = static_cast<int>(row.coefficients.size()) - 1;
        for (int d = 0; d <= dim; ++d) {
            const Rational expected = Rational::parse(row.coefficients[d]);
            const Rational computed = e.poly.coeff(d);
            if (computed != expected)
                report.mismatches.push_back({row.m, row.n, d, expected.str(), computed.str()});
        }
        if (e.poly.degree() != dim)
            report.mismatches.push_back(
                {row.m, row.n, e.poly.degree(), "(degree " + std::to_string(dim) + ")",
                 "(degree " + std::to_string(e.poly.degree()) + ")"});
    }
    return report;
}

} // namespace ordpoly
