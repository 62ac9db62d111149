#include <stdio.h>
#include <math.h>
#include "qho_nodal.h"

int main(void) {
    double z[8];
    size_t n = 0;
    if (qn_hermite_zeros(5, z, 8, &n) != QN_STATUS_OK || n != 5) return 1;
    if (fabs(z[2]) > 1e-12) return 2;

    double tc = 0.0;
    if (qn_theta_c(5, &tc) != QN_STATUS_OK || !(tc > 0.0 && tc < 0.7853981633974483)) return 3;

    QnFamily *f = NULL;
    if (qn_family_stern(5, 0.1, &f) != QN_STATUS_OK) return 4;
    size_t mu = 0, comps = 0;
    if (qn_count_domains(f, 6.0, 256, &mu, &comps) != QN_STATUS_OK) return 5;
    qn_family_free(f);
    if (mu != 2) return 6;

    if (qn_check_theta(5, tc) != QN_STATUS_CRITICAL_THETA) return 7;
    if (qn_last_error()[0] == '\0') return 8;

    printf("ok %s mu=%zu\n", qn_version(), mu);
    return 0;
}
