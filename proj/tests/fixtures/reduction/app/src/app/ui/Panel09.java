// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel09 {
  private final Widget widget;

  public Panel09(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.setSize(Sizes.FERN_SIZE);
    widget.bindPort(Ports.LAGOON_PORT);
  }
}
