#include <stdio.h>
#include <stdlib.h>

#include "roleprism.h"

static int check(RpStatus s, const char *what) {
  if (s != RP_STATUS_OK) {
    fprintf(stderr, "%s: %s\n", what, rp_status_message(s));
    exit(1);
  }
  return 0;
}

static void report(const char *name, const RpGraph *g) {
  RpDecision d;
  check(rp_decide(g, &d), "rp_decide");
  if (d.has_assignment) {
    printf("%s: YES\n", name);
  } else {
    printf("%s: NO side=%d cond=%d\n", name, (int)d.side, (int)d.condition);
  }
}

int main(void) {
  RpGraph *c5 = NULL;
  RpGraph *k3 = NULL;
  RpGraph *star = NULL;
  const size_t triangle[] = {0, 1, 1, 2, 2, 0};
  const size_t claw[] = {0, 1, 0, 2, 0, 3};

  check(rp_graph_parse("Dhc", &c5), "parse");
  check(rp_graph_from_edges(3, triangle, 3, &k3), "k3");
  check(rp_graph_from_edges(4, claw, 3, &star), "star");
  report("C5", c5);
  report("K3", k3);

  RpWitness *w = NULL;
  check(rp_witness_new(star, &w), "witness");
  size_t needed = 0;
  char name[32];
  check(rp_witness_construction(w, name, sizeof name, &needed), "construction");
  size_t len = rp_witness_len(w);
  unsigned char *roles = malloc(len);
  check(rp_witness_roles(w, roles, len), "roles");
  bool valid = false;
  check(rp_verify(star, roles, len, &valid), "verify");
  printf("witness %s: %zu roles, %s\n", name, len, valid ? "verified" : "INVALID");

  free(roles);
  rp_witness_free(w);
  rp_graph_free(star);
  rp_graph_free(k3);
  rp_graph_free(c5);
  return 0;
}
