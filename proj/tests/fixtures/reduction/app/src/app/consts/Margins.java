// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.consts;

public class Margins {
  public static final int ALPHA_MARGIN = 1;
  public static final int BRAVO_MARGIN = 2;
  public static final int CEDAR_MARGIN = 3;
  public static final int DELTA_MARGIN = 4;
  public static final int EMBER_MARGIN = 5;
  public static final int FJORD_MARGIN = 6;
  public static final int GAMMA_MARGIN = 7;
  public static final int HAZEL_MARGIN = 8;
  public static final int IVORY_MARGIN = 9;
  public static final int JADE_MARGIN = 10;
  public static final int KAPPA_MARGIN = 11;
  public static final int LUNAR_MARGIN = 12;
  public static final int MAPLE_MARGIN = 13;
  public static final int NOBLE_MARGIN = 14;
  public static final int OMEGA_MARGIN = 15;
  public static final int PRISM_MARGIN = 16;
  public static final int QUARTZ_MARGIN = 17;
  public static final int RAVEN_MARGIN = 18;
  public static final int SIGMA_MARGIN = 19;
  public static final int TANGO_MARGIN = 20;
  public static final int UMBRA_MARGIN = 21;
  public static final int VELVET_MARGIN = 22;
  public static final int WILLOW_MARGIN = 23;
  public static final int XENON_MARGIN = 24;
  public static final int YONDER_MARGIN = 25;
  public static final int ZEPHYR_MARGIN = 26;
  public static final int AMBER_MARGIN = 27;
  public static final int BASALT_MARGIN = 28;
  public static final int COBALT_MARGIN = 29;
  public static final int DUNE_MARGIN = 30;
  public static final int ECHO_MARGIN = 31;
  public static final int FLINT_MARGIN = 32;
  public static final int GROVE_MARGIN = 33;
  public static final int HARBOR_MARGIN = 34;
  public static final int INDIGO_MARGIN = 35;
  public static final int JUNIPER_MARGIN = 36;
  public static final int KESTREL_MARGIN = 37;
  public static final int LAGOON_MARGIN = 38;
  public static final int MESA_MARGIN = 39;
  public static final int NECTAR_MARGIN = 40;
  public static final int ONYX_MARGIN = 41;
  public static final int PEBBLE_MARGIN = 42;
  public static final int QUILL_MARGIN = 43;
  public static final int RIDGE_MARGIN = 44;
  public static final int SPRUCE_MARGIN = 45;
  public static final int THISTLE_MARGIN = 46;
  public static final int UPLAND_MARGIN = 47;
  public static final int VALE_MARGIN = 48;
  public static final int WREN_MARGIN = 49;
  public static final int YARROW_MARGIN = 50;
  public static final int ZINC_MARGIN = 51;
  public static final int ASPEN_MARGIN = 52;
  public static final int BIRCH_MARGIN = 53;
  public static final int CORAL_MARGIN = 54;
  public static final int DAWN_MARGIN = 55;
  public static final int ELM_MARGIN = 56;
  public static final int FERN_MARGIN = 57;
  public static final int GLADE_MARGIN = 58;
  public static final int HERON_MARGIN = 59;
  public static final int IRIS_MARGIN = 60;
}
