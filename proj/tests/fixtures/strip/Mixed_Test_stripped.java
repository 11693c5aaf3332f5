package com.fixture;

import org.junit.Test;
import org.junit.Assert;
import static org.junit.Assert.*;

public class Mixed_Test {

    @Test
    public void roundTrip() {
        TextKit kit = new TextKit("-");
        String out = kit.capitalize("word");
        // TODO: assert here
        String again = kit.capitalize(out);
    }

    @Test
    public void rejectsBroken() {
        TextKit kit = new TextKit("-");
        try {
            kit.join(null, 3);
            // TODO: assert here
        } catch (IllegalArgumentException expected) {
        }
    }

    @Test
    public void nullStaysNull() {
        TextKit kit = new TextKit("-");
        String out = kit.capitalize(null);
        // TODO: assert here
    }
}
